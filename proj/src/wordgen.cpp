#include "sturmian/wordgen.hpp"

#include "sturmian/error.hpp"
#include "sturmian/returns.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace sturmian {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max() / 4;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return std::min(kSaturated, a + b); }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return std::min(kSaturated, a * b);
}

BigInt lcm(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

BigInt scaled(const ExactRational& r, const BigInt& scale) { return r.numerator() * (scale / r.denominator()); }

std::string apply_substitution(const Substitution& images, std::string_view w, std::size_t limit) {
    std::string out;
    for (char c : w) {
        out += images.at(c);
        if (out.size() >= limit) {
            out.resize(limit);
            break;
        }
    }
    return out;
}

void validate_substitution(const Substitution& images) {
    if (images.empty()) throw Error(ErrorKind::InvalidParameter, "empty substitution");
    for (const auto& [letter, image] : images) {
        if (image.empty()) throw Error(ErrorKind::InvalidParameter, std::string("empty image for ") + letter);
        for (char c : image) {
            if (!images.contains(c)) {
                throw Error(ErrorKind::InvalidParameter, std::string("image uses unmapped letter ") + c);
            }
        }
    }
}

std::string primitive_root(std::string_view w) {
    for (std::size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d == 0 && w.substr(d) == w.substr(0, w.size() - d)) return std::string(w.substr(0, d));
    }
    return std::string(w);
}

}  // namespace

FiniteWord characteristic_prefix(const CFExpansion& cf, std::size_t length) {
    if (!cf.is_normalized()) {
        throw Error(ErrorKind::InvalidParameter, "characteristic_prefix needs a normalized slope (a_1 = 1), got " +
                                                     cf.to_string());
    }
    std::string older = "B";
    std::string current = "A";
    for (std::size_t n = 1; current.size() < length; ++n) {
        const BigInt& a = cf.coefficient(n + 1);
        // s_n begins with s_{n-1}^a; repetitions past `length` are never read.
        const std::size_t needed = length / current.size() + 1;
        const std::size_t reps = a > needed ? needed : a.convert_to<std::size_t>();
        std::string next;
        next.reserve(reps * current.size() + older.size());
        for (std::size_t i = 0; i < reps; ++i) next += current;
        if (reps == a) next += older;
        older = std::move(current);
        current = std::move(next);
    }
    current.resize(length);
    return FiniteWord(std::move(current));
}

FiniteWord interval_exchange_prefix(const ExchangeSpec& spec, std::size_t length) {
    const ExactRational zero(0), one(1);
    if (!(zero < spec.alpha_lo && spec.alpha_lo <= spec.alpha_hi && spec.alpha_hi < one)) {
        throw Error(ErrorKind::InvalidParameter, "slope bracket must satisfy 0 < lo <= hi < 1");
    }
    const bool left = spec.convention == IntervalConvention::LeftClosed;
    const bool x0_ok = left ? (zero <= spec.x0_lo && spec.x0_lo <= spec.x0_hi && spec.x0_hi < one)
                            : (zero < spec.x0_lo && spec.x0_lo <= spec.x0_hi && spec.x0_hi <= one);
    if (!x0_ok) {
        throw Error(ErrorKind::InvalidParameter, "initial point bracket outside the interval");
    }
    // T^n(x0) = x0 + j - n*alpha where j counts the A steps so far. The point
    // lies in I_A iff x0 + j - (n+1)*alpha is < 0 (left) or <= 0 (right); the
    // expression is affine, so its extremes over the bracket box are at corners.
    BigInt scale = lcm(lcm(spec.alpha_lo.denominator(), spec.alpha_hi.denominator()),
                       lcm(spec.x0_lo.denominator(), spec.x0_hi.denominator()));
    const BigInt a_lo = scaled(spec.alpha_lo, scale);
    const BigInt a_hi = scaled(spec.alpha_hi, scale);
    BigInt lo = scaled(spec.x0_lo, scale) - a_hi;
    BigInt hi = scaled(spec.x0_hi, scale) - a_lo;
    std::string out;
    out.reserve(length);
    for (std::size_t n = 0; n < length; ++n) {
        char letter;
        if (left ? hi < 0 : hi <= 0) {
            letter = 'A';
        } else if (left ? lo >= 0 : lo > 0) {
            letter = 'B';
        } else {
            throw Error(ErrorKind::PrecisionExhausted,
                        "orbit bracket straddles the boundary at step " + std::to_string(n));
        }
        out += letter;
        if (letter == 'A') {
            lo += scale;
            hi += scale;
        }
        lo -= a_hi;
        hi -= a_lo;
    }
    return FiniteWord(std::move(out));
}

ExchangeSpec characteristic_exchange_spec(const CFExpansion& cf, std::size_t N) {
    if (N < 2) {
        throw Error(ErrorKind::InvalidParameter, "bracket needs N >= 2 (p_1/q_1 = 1)");
    }
    auto [lo, hi] = slope_bracket(cf, N);
    ExactRational one(1);
    return ExchangeSpec{lo, hi, one - hi, one - lo, IntervalConvention::LeftClosed};
}

FiniteWord certified_exchange_prefix(const CFExpansion& cf, std::size_t length) {
    std::size_t N = 2;
    {
        Convergents c = convergents(cf, 2);
        BigInt q_prev = c.q(1), q = c.q(2);
        while (q < BigInt(length) * 4) {
            BigInt next = cf.coefficient(N + 1) * q + q_prev;
            q_prev = std::move(q);
            q = std::move(next);
            ++N;
        }
    }
    for (int attempt = 0; attempt < 64; ++attempt, N += 2) {
        try {
            return interval_exchange_prefix(characteristic_exchange_spec(cf, N), length);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PrecisionExhausted) throw;
        }
    }
    throw Error(ErrorKind::PrecisionExhausted, "could not certify the orbit coding");
}

FiniteWord substitution_prefix(const Substitution& images, char seed, std::size_t length) {
    validate_substitution(images);
    auto it = images.find(seed);
    if (it == images.end() || it->second.size() < 2 || it->second.front() != seed) {
        throw Error(ErrorKind::NotProlongable, std::string("substitution is not prolongable on ") + seed);
    }
    std::string w(1, seed);
    while (w.size() < length) {
        w = apply_substitution(images, w, length);
    }
    w.resize(length);
    return FiniteWord(std::move(w));
}

FiniteWord periodic_prefix(const FiniteWord& pattern, std::size_t length) {
    if (pattern.empty()) {
        throw Error(ErrorKind::InvalidParameter, "empty periodic pattern");
    }
    return pattern.periodic_extension(length);
}

std::vector<Run> block_structure(const FiniteWord& w) {
    std::vector<Run> runs;
    for (char c : w.view()) {
        if (!runs.empty() && runs.back().letter == c) {
            ++runs.back().length;
        } else {
            runs.push_back({c, 1});
        }
    }
    return runs;
}

std::uint64_t required_prefix_length(const RecurrenceBound& bound, std::uint64_t depth) {
    return sat_add(bound(sat_add(bound(depth), 1)), depth);
}

std::size_t certified_depth(const RecurrenceBound& bound, std::uint64_t prefix_length) {
    if (required_prefix_length(bound, 1) > prefix_length) return 0;
    std::uint64_t good = 1, step = 1;
    // Gallop then bisect; the requirement is nondecreasing in depth.
    while (required_prefix_length(bound, good + step) <= prefix_length) {
        good += step;
        step *= 2;
    }
    std::uint64_t bad = good + step;
    while (bad - good > 1) {
        std::uint64_t mid = good + (bad - good) / 2;
        if (required_prefix_length(bound, mid) <= prefix_length) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    return static_cast<std::size_t>(good);
}

LanguageView::LanguageView(FiniteWord prefix, std::optional<CFExpansion> slope, RecurrenceBound bound,
                           std::string label, std::optional<std::size_t> period)
    : prefix_(std::move(prefix)),
      slope_(std::move(slope)),
      bound_(std::move(bound)),
      label_(std::move(label)),
      period_(period) {
    std::set<char> letters(prefix_.view().begin(), prefix_.view().end());
    alphabet_.assign(letters.begin(), letters.end());
    certified_n_ = certified_depth(bound_, prefix_.size());
    if (certified_n_ < 1) {
        throw Error(ErrorKind::InvalidParameter,
                    "prefix of length " + std::to_string(prefix_.size()) + " certifies no factor length");
    }
    index_ = std::make_shared<const FactorIndex>(prefix_.str());
}

void LanguageView::require_depth(std::size_t n, std::string_view what) const {
    if (n > certified_n_) {
        throw Error(ErrorKind::BeyondCertifiedDepth, std::string(what) + " needs depth " + std::to_string(n) +
                                                         " but " + label_ + " is certified to " +
                                                         std::to_string(certified_n_));
    }
}

const CFExpansion& LanguageView::require_slope() const {
    if (!slope_) {
        throw Error(ErrorKind::NotSturmianSpec, label_ + " has no slope");
    }
    return *slope_;
}

RecurrenceBound sturmian_recurrence(const CFExpansion& cf) {
    if (!cf.is_normalized()) {
        throw Error(ErrorKind::InvalidParameter, "slope must be normalized, got " + cf.to_string());
    }
    return [cf](std::uint64_t n) { return to_u64(recurrence_closed(cf, n)); };
}

LanguageView sturmian_view(const CFExpansion& cf, std::size_t depth) {
    RecurrenceBound bound = sturmian_recurrence(cf);
    auto length = required_prefix_length(bound, std::max<std::size_t>(depth, 1));
    return LanguageView(characteristic_prefix(cf, length), cf, std::move(bound), "slope " + cf.to_string());
}

LanguageView sturmian_view_of_length(const CFExpansion& cf, std::size_t length) {
    RecurrenceBound bound = sturmian_recurrence(cf);
    return LanguageView(characteristic_prefix(cf, length), cf, std::move(bound), "slope " + cf.to_string());
}

RecurrenceBound substitution_recurrence(const Substitution& images, char seed) {
    validate_substitution(images);
    if (!images.contains(seed)) throw Error(ErrorKind::InvalidParameter, "seed letter not mapped");

    // Two-letter factors: closure of the factors inside images and across image boundaries.
    std::set<std::string> two;
    for (const auto& [letter, image] : images) {
        for (std::size_t i = 0; i + 1 < image.size(); ++i) two.insert(image.substr(i, 2));
    }
    for (bool grew = true; grew;) {
        grew = false;
        for (const std::string& ab : std::set<std::string>(two)) {
            std::string img = images.at(ab[0]) + images.at(ab[1]);
            for (std::size_t i = 0; i + 1 < img.size(); ++i) grew |= two.insert(img.substr(i, 2)).second;
        }
    }

    // Block lengths |σ^k(c)|.
    struct Lengths {
        std::uint64_t min, max;
    };
    std::vector<Lengths> lengths;
    {
        std::map<char, std::uint64_t> len;
        for (const auto& kv : images) len[kv.first] = 1;
        for (int k = 0; k < 200; ++k) {
            Lengths l{kSaturated, 0};
            for (const auto& [c, v] : len) {
                l.min = std::min(l.min, v);
                l.max = std::max(l.max, v);
            }
            lengths.push_back(l);
            if (l.min >= (std::uint64_t{1} << 40)) break;
            std::map<char, std::uint64_t> next;
            for (const auto& [c, image] : images) {
                std::uint64_t total = 0;
                for (char d : image) total = sat_add(total, len[d]);
                next[c] = total;
            }
            len = std::move(next);
        }
        if (lengths.back().min < 2) throw Error(ErrorKind::InvalidParameter, "substitution is not growing");
    }

    // R(2): smallest m such that every length-m window of the fixed point contains all of `two`.
    // A window of length m <= min|σ^j| + 1 lies inside σ^j(ab) for some ab in `two`.
    std::uint64_t r2 = 0;
    for (std::uint64_t m = 2; m <= 4096 && r2 == 0; ++m) {
        std::size_t j = 0;
        while (lengths[j].min + 1 < m) ++j;
        bool all = true;
        for (const std::string& ab : two) {
            std::string block = ab;
            for (std::size_t step = 0; step < j; ++step) block = apply_substitution(images, block, kSaturated);
            if (block.size() < m) continue;
            std::map<std::string, std::size_t> counts;
            auto add = [&](std::size_t i, int delta) {
                auto& c = counts[block.substr(i, 2)];
                c = static_cast<std::size_t>(static_cast<long>(c) + delta);
                if (c == 0) counts.erase(block.substr(i, 2));
            };
            for (std::size_t i = 0; i + 1 < m; ++i) add(i, +1);
            for (std::size_t start = 0;; ++start) {
                if (counts.size() != two.size()) {
                    all = false;
                    break;
                }
                if (start + m >= block.size()) break;
                add(start, -1);
                add(start + m - 1, +1);
            }
            if (!all) break;
        }
        if (all) r2 = m;
    }
    if (r2 == 0) throw Error(ErrorKind::InvalidParameter, "substitution does not look primitive");

    auto table = std::make_shared<const std::vector<Lengths>>(std::move(lengths));
    return [table, r2](std::uint64_t n) -> std::uint64_t {
        std::size_t k = 0;
        while (k < table->size() && (*table)[k].min + 1 < n) ++k;
        if (k == table->size()) return kSaturated;
        return sat_mul(r2 + 1, (*table)[k].max);
    };
}

LanguageView substitution_view(const Substitution& images, char seed, std::size_t depth, std::string label) {
    RecurrenceBound bound = substitution_recurrence(images, seed);
    auto length = required_prefix_length(bound, std::max<std::size_t>(depth, 1));
    if (length >= kSaturated) throw Error(ErrorKind::InvalidParameter, "depth too large");
    return LanguageView(substitution_prefix(images, seed, length), std::nullopt, std::move(bound), std::move(label));
}

LanguageView thue_morse_view(std::size_t depth) {
    return substitution_view({{'0', "01"}, {'1', "10"}}, '0', depth, "thue-morse");
}

LanguageView fibonacci_substitution_view(std::size_t depth) {
    return substitution_view({{'A', "AB"}, {'B', "A"}}, 'A', depth, "fibonacci-substitution");
}

LanguageView periodic_view(const FiniteWord& pattern, std::size_t depth) {
    if (pattern.empty()) throw Error(ErrorKind::InvalidParameter, "empty periodic pattern");
    const std::string root = primitive_root(pattern.view());
    const std::uint64_t p = root.size();
    RecurrenceBound bound = [p](std::uint64_t n) { return p + (n == 0 ? 0 : n - 1); };
    auto length = required_prefix_length(bound, std::max<std::size_t>(depth, 1));
    return LanguageView(periodic_prefix(FiniteWord(root), length), std::nullopt, std::move(bound),
                        "periodic:" + pattern.str(), root.size());
}

LanguageView control_view(const std::string& name, std::size_t depth) {
    if (name == "thue-morse") return thue_morse_view(depth);
    if (name == "fibonacci-substitution") return fibonacci_substitution_view(depth);
    if (name.starts_with("periodic:")) {
        std::string pattern = name.substr(9);
        if (pattern.empty()) throw Error(ErrorKind::ParseError, "periodic control needs a word");
        return periodic_view(FiniteWord(pattern), depth);
    }
    throw Error(ErrorKind::ParseError, "unknown control '" + name + "'");
}

}  // namespace sturmian
