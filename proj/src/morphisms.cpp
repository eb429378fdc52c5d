#include "sturmian/morphisms.hpp"

#include "sturmian/error.hpp"

#include <cctype>

namespace sturmian {

namespace {

void require_ab_word(const FiniteWord& w, std::string_view what) {
    if (w.empty()) throw Error(ErrorKind::InvalidParameter, std::string(what) + " is empty");
    for (char c : w.view()) {
        if (c != 'A' && c != 'B') {
            throw Error(ErrorKind::InvalidParameter, std::string(what) + " must be a word over {A,B}: " + w.str());
        }
    }
}

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

}  // namespace

BinaryMorphism::BinaryMorphism(FiniteWord image_a, FiniteWord image_b)
    : image_a_(std::move(image_a)), image_b_(std::move(image_b)) {
    require_ab_word(image_a_, "image of A");
    require_ab_word(image_b_, "image of B");
}

BinaryMorphism BinaryMorphism::parse(std::string_view text) {
    const std::string s = strip(text);
    auto semi = s.find(';');
    if (semi == std::string::npos) throw Error(ErrorKind::ParseError, "expected 'A->..; B->..'");
    FiniteWord a, b;
    bool seen_a = false, seen_b = false;
    for (const std::string& part : {s.substr(0, semi), s.substr(semi + 1)}) {
        if (part.size() < 4 || part.substr(1, 2) != "->") {
            throw Error(ErrorKind::ParseError, "bad morphism rule '" + part + "'");
        }
        FiniteWord image(part.substr(3));
        if (part[0] == 'A' && !seen_a) {
            a = image;
            seen_a = true;
        } else if (part[0] == 'B' && !seen_b) {
            b = image;
            seen_b = true;
        } else {
            throw Error(ErrorKind::ParseError, "bad morphism rule '" + part + "'");
        }
    }
    try {
        return BinaryMorphism(a, b);
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

const FiniteWord& BinaryMorphism::image(char letter) const {
    if (letter == 'A') return image_a_;
    if (letter == 'B') return image_b_;
    throw Error(ErrorKind::InvalidParameter, std::string("letter outside {A,B}: ") + letter);
}

FiniteWord BinaryMorphism::apply(const FiniteWord& w) const {
    std::string out;
    out.reserve(w.size() * std::max(image_a_.size(), image_b_.size()));
    for (char c : w.view()) out += image(c).str();
    return FiniteWord(std::move(out));
}

Mat2 BinaryMorphism::incidence() const {
    Mat2 m;
    m.m[0] = {BigInt(image_a_.count('A')), BigInt(image_a_.count('B'))};
    m.m[1] = {BigInt(image_b_.count('A')), BigInt(image_b_.count('B'))};
    return m;
}

std::string BinaryMorphism::to_string() const { return "A->" + image_a_.str() + "; B->" + image_b_.str(); }

BinaryMorphism compose(const BinaryMorphism& outer, const BinaryMorphism& inner) {
    return {outer.apply(inner.image_a()), outer.apply(inner.image_b())};
}

BinaryMorphism power(const BinaryMorphism& m, std::size_t k) {
    BinaryMorphism out = BinaryMorphism::identity();
    for (std::size_t i = 0; i < k; ++i) out = compose(m, out);
    return out;
}

Generators generators() { return {{"AB", "B"}, {"BA", "B"}, {"B", "A"}}; }

BinaryMorphism phi(std::size_t c) {
    if (c < 1) throw Error(ErrorKind::InvalidParameter, "phi needs c >= 1");
    return {FiniteWord(std::string(c, 'A') + "B"), "A"};
}

CFExpansion slope_transform(const CFExpansion& cf, const BigInt& c) {
    if (!cf.is_normalized()) {
        throw Error(ErrorKind::InvalidParameter, "slope_transform needs a normalized slope, got " + cf.to_string());
    }
    if (c < 1) throw Error(ErrorKind::InvalidParameter, "slope_transform needs c >= 1");
    return cf.tail_from(2).with_prefix({BigInt(1), c});
}

LiftedPower lift_power(const FiniteWord& w, const FiniteWord& v, std::size_t c) {
    require_ab_word(w, "w");
    require_ab_word(v, "v");
    if (!is_power_of(v.view(), w.view())) {
        throw Error(ErrorKind::InvalidParameter, v.str() + " is not a power of " + w.str());
    }
    if (v.size() < 2 * w.size()) {
        throw Error(ErrorKind::ExponentTooSmall,
                    "exponent " + ExactRational(v.size(), w.size()).to_string() + " is below 2");
    }
    if (v.view().find("BB") != std::string_view::npos) {
        throw Error(ErrorKind::InvalidParameter, "BB cannot occur in a word of slope > 1/2");
    }
    const BinaryMorphism m = phi(c);
    LiftedPower out;
    out.w = m.apply(w);
    out.v = m.apply(v) + FiniteWord(std::string(c, 'A'));
    if (!is_power_of(out.v.view(), out.w.view())) {
        throw Error(ErrorKind::Mismatch, out.v.str() + " is not a power of " + out.w.str());
    }
    out.exponent = ExactRational(out.v.size(), out.w.size());
    return out;
}

ConstructionTrace construct_max_index_factor(const CFExpansion& cf, std::size_t N) {
    if (N < 1) throw Error(ErrorKind::InvalidParameter, "N must be >= 1");
    if (!cf.is_normalized()) {
        throw Error(ErrorKind::InvalidParameter, "construction needs a normalized slope, got " + cf.to_string());
    }
    const BigInt& a_top = cf.coefficient(N + 1);
    ConstructionTrace trace;
    trace.N = N;

    ConstructionStep seed;
    seed.i = 0;
    seed.c = a_top;
    seed.w = "A";
    seed.v = FiniteWord(std::string(to_u64(a_top + 1), 'A'));
    seed.slope = cf.tail_from(N + 1).with_prefix({BigInt(1)});
    trace.steps.push_back(seed);

    for (std::size_t i = 1; i + 1 <= N; ++i) {
        const ConstructionStep& prev = trace.steps.back();
        ConstructionStep step;
        step.i = i;
        step.c = cf.coefficient(N - i + 1);
        LiftedPower lifted = lift_power(prev.w, prev.v, to_u64(step.c));
        step.w = std::move(lifted.w);
        step.v = std::move(lifted.v);
        step.slope = slope_transform(prev.slope, step.c);
        trace.steps.push_back(std::move(step));
    }
    if (!(trace.steps.back().slope == cf)) {
        throw Error(ErrorKind::Mismatch, "construction ended at slope " + trace.steps.back().slope.to_string() +
                                             " instead of " + cf.to_string());
    }
    trace.w = trace.steps.back().w;
    trace.v = trace.steps.back().v;
    trace.exponent = ExactRational(trace.v.size(), trace.w.size());
    return trace;
}

}  // namespace sturmian
