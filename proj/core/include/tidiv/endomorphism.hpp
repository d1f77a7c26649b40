#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tidiv/ideal.hpp"
#include "tidiv/polynomial.hpp"

namespace tidiv {

// Endomorphism of P^n: n+1 homogeneous forms of one degree m >= 1 with
// empty common zero locus. Instances only exist validated.
class Endomorphism {
public:
    // Validates equal degrees and an empty base locus (the forms' ideal is
    // empty in projective space). Throws std::invalid_argument with the
    // offending detail otherwise; a nonempty base locus reports its profile.
    static Endomorphism validate(std::vector<Polynomial> forms,
                                 const Budget& budget = Budget::defaults());

    std::size_t ambient_dim() const { return n_; }          // n
    std::uint64_t degree() const { return m_; }             // m, f*H = mH
    const std::vector<Polynomial>& forms() const { return forms_; }

    // Pullback F(f_0, .., f_n); multiplies degrees by m.
    Polynomial pullback(const Polynomial& form) const;

    // l-fold composite, degree m^l.
    Endomorphism iterate(std::uint64_t l) const;

private:
    Endomorphism(std::size_t n, std::uint64_t m, std::vector<Polynomial> forms)
        : n_(n), m_(m), forms_(std::move(forms)) {}

    std::size_t n_;
    std::uint64_t m_;
    std::vector<Polynomial> forms_;
};

// Outcome of the total-invariance test F o f = c * F^m. On success carries
// the scalar c; on failure the 1-based division stage that left a nonzero
// remainder.
struct InvarianceCertificate {
    bool invariant = false;
    Rational scalar = 0;
    std::size_t failed_stage = 0;
};

// F must be homogeneous, nonconstant and squarefree (checked via the
// squarefreeness criterion below).
InvarianceCertificate is_totally_invariant(const Endomorphism& f, const Polynomial& form,
                                           const Budget& budget = Budget::defaults());

// A hypersurface form is squarefree iff its Jacobian ideal has projective
// dimension <= n-2 (characteristic zero: a repeated factor forces a
// codimension-one singular locus).
bool is_squarefree_form(const Polynomial& form, const Budget& budget = Budget::defaults());

// Set-theoretic equality V(I o f) = V(I), decided by two-sided radical
// membership of generators. I must be homogeneous.
bool is_totally_invariant_subvariety(const Endomorphism& f, const Ideal& ideal,
                                     const Budget& budget = Budget::defaults());

// div(det Jacobian) = (m-1) D + R for a totally invariant divisor D; the
// residual form cuts the logarithmic ramification divisor R.
struct RamificationData {
    Polynomial jac;                         // degree (n+1)(m-1)
    std::uint64_t divisor_multiplicity = 0; // multiplicity of F in jac
    Polynomial log_residual;                // jac / F^(m-1) when effective
    bool effective = false;
};

// Requires is_totally_invariant(f, form) to hold and form squarefree; a
// division failure is reported through `effective`, never repaired.
RamificationData log_ramification(const Endomorphism& f, const Polynomial& form,
                                  const Budget& budget = Budget::defaults());

// True iff the generic point of V(z_ideal) avoids supp(R), decided as
// radical_member(log_residual, z_ideal) == false.
bool component_avoids_ramification(const RamificationData& ram, const Ideal& z_ideal,
                                   const Budget& budget = Budget::defaults());

}  // namespace tidiv
