#include "sturmian/confrac.hpp"

#include "sturmian/error.hpp"

#include <algorithm>
#include <cctype>

namespace sturmian {

namespace {

std::vector<BigInt> rotate_left(const std::vector<BigInt>& v, std::size_t by) {
    std::vector<BigInt> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[(i + by) % v.size()];
    }
    return out;
}

std::string join(const std::vector<BigInt>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].str();
    }
    return out;
}

BigInt parse_coefficient(const std::string& token) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw Error(ErrorKind::ParseError, "bad continued-fraction coefficient '" + token + "'");
    }
    return BigInt(token);
}

std::vector<BigInt> parse_list(const std::string& body) {
    std::vector<BigInt> out;
    if (body.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = body.find(',', start);
        out.push_back(parse_coefficient(body.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

CFExpansion::CFExpansion(std::vector<BigInt> head, std::vector<BigInt> period)
    : head_(std::move(head)), period_(std::move(period)) {
    for (const auto* list : {&head_, &period_}) {
        for (const auto& a : *list) {
            if (a < 1) {
                throw Error(ErrorKind::InvalidParameter, "continued-fraction coefficients must be >= 1");
            }
        }
    }
}

CFExpansion CFExpansion::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.size() < 4 || s.front() != '[' || s.back() != ']') {
        throw Error(ErrorKind::ParseError, "expected [0;...] but got '" + std::string(text) + "'");
    }
    s = s.substr(1, s.size() - 2);
    auto semi = s.find(';');
    if (semi == std::string::npos || s.substr(0, semi) != "0") {
        throw Error(ErrorKind::ParseError, "slope must have integer part 0: '" + std::string(text) + "'");
    }
    std::string rest = s.substr(semi + 1);
    std::vector<BigInt> head, period;
    auto open = rest.find('(');
    if (open != std::string::npos) {
        if (rest.back() != ')' || rest.find('(', open + 1) != std::string::npos) {
            throw Error(ErrorKind::ParseError, "period must be a single trailing (...) group");
        }
        std::string head_text = rest.substr(0, open);
        if (!head_text.empty()) {
            if (head_text.back() != ',') {
                throw Error(ErrorKind::ParseError, "missing ',' before period");
            }
            head_text.pop_back();
        }
        head = parse_list(head_text);
        period = parse_list(rest.substr(open + 1, rest.size() - open - 2));
        if (period.empty()) {
            throw Error(ErrorKind::ParseError, "empty period");
        }
    } else {
        head = parse_list(rest);
    }
    try {
        return CFExpansion(std::move(head), std::move(period));
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::optional<std::size_t> CFExpansion::known_length() const noexcept {
    if (has_period()) return std::nullopt;
    return head_.size();
}

std::optional<BigInt> CFExpansion::try_coefficient(std::size_t k) const {
    if (k == 0) return std::nullopt;
    if (k <= head_.size()) return head_[k - 1];
    if (!has_period()) return std::nullopt;
    return period_[(k - 1 - head_.size()) % period_.size()];
}

const BigInt& CFExpansion::coefficient(std::size_t k) const {
    if (k == 0) {
        throw Error(ErrorKind::InvalidParameter, "coefficients are indexed from 1");
    }
    if (k <= head_.size()) return head_[k - 1];
    if (!has_period()) {
        throw Error(ErrorKind::InsufficientCoefficients,
                    "coefficient a_" + std::to_string(k) + " requested but " + to_string() + " has only " +
                        std::to_string(head_.size()));
    }
    return period_[(k - 1 - head_.size()) % period_.size()];
}

bool CFExpansion::is_normalized() const {
    auto a1 = try_coefficient(1);
    return a1 && *a1 == 1;
}

CFExpansion CFExpansion::tail_from(std::size_t k) const {
    if (k == 0) {
        throw Error(ErrorKind::InvalidParameter, "coefficients are indexed from 1");
    }
    if (k - 1 <= head_.size()) {
        return CFExpansion(std::vector<BigInt>(head_.begin() + static_cast<long>(k - 1), head_.end()), period_);
    }
    if (!has_period()) {
        throw Error(ErrorKind::InsufficientCoefficients, "tail a_" + std::to_string(k) + " of " + to_string());
    }
    return CFExpansion({}, rotate_left(period_, (k - 1 - head_.size()) % period_.size()));
}

CFExpansion CFExpansion::with_prefix(const std::vector<BigInt>& coefficients) const {
    std::vector<BigInt> head = coefficients;
    head.insert(head.end(), head_.begin(), head_.end());
    return CFExpansion(std::move(head), period_);
}

CFExpansion CFExpansion::canonical() const {
    std::vector<BigInt> head = head_;
    std::vector<BigInt> period = period_;
    if (!period.empty()) {
        const std::size_t p = period.size();
        for (std::size_t d = 1; d <= p; ++d) {
            if (p % d != 0) continue;
            bool ok = true;
            for (std::size_t i = d; i < p && ok; ++i) ok = period[i] == period[i - d];
            if (ok) {
                period.resize(d);
                break;
            }
        }
        while (!head.empty() && head.back() == period.back()) {
            head.pop_back();
            std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
        }
    }
    return CFExpansion(std::move(head), std::move(period));
}

std::string CFExpansion::to_string() const {
    std::string out = "[0;" + join(head_);
    if (has_period()) {
        if (!head_.empty()) out += ',';
        out += "(" + join(period_) + ")";
    }
    return out + "]";
}

bool operator==(const CFExpansion& a, const CFExpansion& b) {
    CFExpansion ca = a.canonical();
    CFExpansion cb = b.canonical();
    return ca.head_ == cb.head_ && ca.period_ == cb.period_;
}

Convergents convergents(const CFExpansion& cf, std::size_t N) {
    std::vector<BigInt> p{1, 0};
    std::vector<BigInt> q{0, 1};
    p.reserve(N + 2);
    q.reserve(N + 2);
    for (std::size_t k = 1; k <= N; ++k) {
        const BigInt& a = cf.coefficient(k);
        p.push_back(a * p[k] + p[k - 1]);
        q.push_back(a * q[k] + q[k - 1]);
    }
    return Convergents(std::move(p), std::move(q));
}

BigInt continuant_denominator(const CFExpansion& cf, std::size_t N, bool reversed) {
    Mat2 product = Mat2::identity();
    for (std::size_t i = 1; i <= N; ++i) {
        Mat2 block = Mat2::continuant(cf.coefficient(reversed ? N + 1 - i : i));
        product = product * block;
    }
    RowVec2 row = RowVec2{1, 0} * product;
    return row[0];
}

NormalizedSlope normalize_slope(const CFExpansion& cf) {
    const BigInt& a1 = cf.coefficient(1);
    if (a1 == 1) {
        return {cf, false};
    }
    std::vector<BigInt> head = cf.head();
    if (head.empty()) {
        head = cf.period();
    }
    std::vector<BigInt> out{1, head.front() - 1};
    out.insert(out.end(), head.begin() + 1, head.end());
    return {CFExpansion(std::move(out), cf.period()), true};
}

std::size_t convergent_index_for(const CFExpansion& cf, const BigInt& n) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidParameter, "factor length must be >= 1");
    }
    BigInt q_prev = 0;  // q_{-1}
    BigInt q_cur = 1;   // q_0
    std::size_t N = 0;
    while (true) {
        BigInt q_next = cf.coefficient(N + 1) * q_cur + q_prev;
        if (q_next > n) return N;
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
        ++N;
    }
}

std::pair<ExactRational, ExactRational> slope_bracket(const CFExpansion& cf, std::size_t N) {
    Convergents c = convergents(cf, N + 1);
    ExactRational a = c.value(static_cast<long>(N));
    ExactRational b = c.value(static_cast<long>(N + 1));
    if (a < b) return {a, b};
    return {b, a};
}

}  // namespace sturmian
