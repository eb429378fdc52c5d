#pragma once

// Binary morphisms over {A,B}, the Sturmian monoid generators and the
// construction of factors whose index meets the upper bound.

#include "sturmian/confrac.hpp"
#include "sturmian/exact.hpp"
#include "sturmian/word.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

class BinaryMorphism {
public:
    /// Both images non-empty words over {A,B}; InvalidParameter otherwise.
    BinaryMorphism(FiniteWord image_a, FiniteWord image_b);

    /// Text form "A->AAB; B->A".
    static BinaryMorphism parse(std::string_view text);
    static BinaryMorphism identity() { return {"A", "B"}; }

    const FiniteWord& image_a() const noexcept { return image_a_; }
    const FiniteWord& image_b() const noexcept { return image_b_; }
    const FiniteWord& image(char letter) const;

    FiniteWord apply(const FiniteWord& w) const;

    /// Rows are (|φ(A)|_A, |φ(A)|_B) and (|φ(B)|_A, |φ(B)|_B).
    Mat2 incidence() const;

    std::string to_string() const;

    friend bool operator==(const BinaryMorphism&, const BinaryMorphism&) = default;

private:
    FiniteWord image_a_;
    FiniteWord image_b_;
};

/// outer ∘ inner: inner is applied first. incidence(compose(o, i)) = incidence(i) * incidence(o).
BinaryMorphism compose(const BinaryMorphism& outer, const BinaryMorphism& inner);
BinaryMorphism power(const BinaryMorphism& m, std::size_t k);

struct Generators {
    BinaryMorphism psi1;  // A -> AB, B -> B
    BinaryMorphism psi2;  // A -> BA, B -> B
    BinaryMorphism E;     // A -> B,  B -> A
};

Generators generators();

/// A -> A^c B, B -> A (equal to E ∘ ψ2^c). InvalidParameter for c < 1.
BinaryMorphism phi(std::size_t c);

/// [0;1,b_2,b_3,...] -> [0;1,c,b_2,b_3,...], the slope of φ_c(u).
CFExpansion slope_transform(const CFExpansion& cf, const BigInt& c);

struct LiftedPower {
    FiniteWord w;
    FiniteWord v;
    ExactRational exponent;  // |v| / |w|
};

/// (φ_c(w), φ_c(v) A^c) for v = w^r, r >= 2.
LiftedPower lift_power(const FiniteWord& w, const FiniteWord& v, std::size_t c);

struct ConstructionStep {
    std::size_t i = 0;
    BigInt c;            // a_{N-i+1}
    FiniteWord w;        // w^(i)
    FiniteWord v;        // v^(i)
    CFExpansion slope;   // slope of the word containing v^(i): [0;1,a_{N+1-i},a_{N+2-i},...]
};

struct ConstructionTrace {
    std::size_t N = 0;
    /// Step 0 is the seed (A, A^{1+a_{N+1}}); steps 1..N-1 apply φ_{a_{N-i+1}}.
    std::vector<ConstructionStep> steps;
    FiniteWord w;
    FiniteWord v;
    ExactRational exponent;

    std::size_t w_length() const noexcept { return w.size(); }
    std::size_t v_length() const noexcept { return v.size(); }
};

/// Factor w with |w| = q_N and power v with |v| = (2 + a_{N+1}) q_N + q_{N-1} - 2.
ConstructionTrace construct_max_index_factor(const CFExpansion& cf, std::size_t N);

}  // namespace sturmian
