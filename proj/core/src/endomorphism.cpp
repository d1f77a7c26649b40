#include "tidiv/endomorphism.hpp"

#include <sstream>

namespace tidiv {

Endomorphism Endomorphism::validate(std::vector<Polynomial> forms, const Budget& budget) {
    if (forms.empty()) throw std::invalid_argument("endomorphism needs n+1 forms");
    std::size_t nv = forms[0].num_vars();
    if (forms.size() != nv)
        throw std::invalid_argument("endomorphism needs exactly one form per coordinate");
    std::optional<std::int64_t> m;
    for (const auto& f : forms) {
        if (f.num_vars() != nv)
            throw std::invalid_argument("endomorphism forms live in different rings");
        auto d = f.homogeneous_degree();
        if (!d) throw std::invalid_argument("endomorphism forms must be homogeneous and nonzero");
        if (m && *m != *d) throw std::invalid_argument("endomorphism forms have mismatched degrees");
        m = d;
    }
    if (*m < 1) throw std::invalid_argument("endomorphism degree m must be at least 1");

    ProjectiveProfile base = proj_profile(Ideal(nv, forms), budget);
    if (base.dimension != -1) {
        std::ostringstream os;
        os << "endomorphism has a nonempty base locus (dimension " << base.dimension
           << ", degree " << base.degree << ")";
        throw std::invalid_argument(os.str());
    }
    return Endomorphism(nv - 1, static_cast<std::uint64_t>(*m), std::move(forms));
}

Polynomial Endomorphism::pullback(const Polynomial& form) const {
    return form.compose(forms_);
}

Endomorphism Endomorphism::iterate(std::uint64_t l) const {
    if (l < 1) throw std::invalid_argument("iterate needs l >= 1");
    Endomorphism out = *this;
    for (std::uint64_t k = 1; k < l; ++k) {
        std::vector<Polynomial> next;
        next.reserve(forms_.size());
        for (const auto& f : forms_) next.push_back(out.pullback(f));
        std::uint64_t m = out.m_ * m_;
        out = Endomorphism(n_, m, std::move(next));
    }
    return out;
}

bool is_squarefree_form(const Polynomial& form, const Budget& budget) {
    auto d = form.homogeneous_degree();
    if (!d || *d < 1)
        throw std::invalid_argument("squarefreeness test needs a nonconstant homogeneous form");
    std::size_t nv = form.num_vars();
    std::vector<Polynomial> partials;
    partials.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) partials.push_back(form.derivative(i));
    ProjectiveProfile prof = proj_profile(Ideal(nv, std::move(partials)), budget);
    return prof.dimension <= static_cast<std::int64_t>(nv) - 3;  // n - 2 with n = nv - 1
}

namespace {

void require_invariant_input(const Endomorphism& f, const Polynomial& form,
                             const Budget& budget) {
    if (form.num_vars() != f.ambient_dim() + 1)
        throw std::invalid_argument("divisor form arity mismatch");
    auto d = form.homogeneous_degree();
    if (!d || *d < 1)
        throw std::invalid_argument("divisor form must be homogeneous and nonconstant");
    if (!is_squarefree_form(form, budget))
        throw std::invalid_argument("divisor form must be squarefree");
}

}  // namespace

InvarianceCertificate is_totally_invariant(const Endomorphism& f, const Polynomial& form,
                                           const Budget& budget) {
    require_invariant_input(f, form, budget);
    // F o f = c F^m, checked by m successive exact divisions by F.
    Polynomial current = f.pullback(form);
    InvarianceCertificate cert;
    for (std::uint64_t stage = 1; stage <= f.degree(); ++stage) {
        auto quotient = exact_divide(current, form);
        if (!quotient) {
            cert.failed_stage = stage;
            return cert;
        }
        current = std::move(*quotient);
    }
    if (!current.is_constant() || current.is_zero()) {
        cert.failed_stage = f.degree() + 1;  // residual not a nonzero scalar
        return cert;
    }
    cert.invariant = true;
    cert.scalar = current.constant_value();
    return cert;
}

bool is_totally_invariant_subvariety(const Endomorphism& f, const Ideal& ideal,
                                     const Budget& budget) {
    if (ideal.num_vars() != f.ambient_dim() + 1)
        throw std::invalid_argument("ideal arity mismatch");
    if (!ideal.all_generators_homogeneous())
        throw std::invalid_argument("total invariance needs a homogeneous ideal");
    std::vector<Polynomial> pulled;
    for (const auto& g : ideal.generators())
        if (!g.is_zero()) pulled.push_back(f.pullback(g));
    Ideal pullback_ideal(ideal.num_vars(), pulled);
    // V(I o f) = V(I) iff the generators vanish on each other's loci.
    for (const auto& g : ideal.generators())
        if (!radical_member(g, pullback_ideal, budget)) return false;
    for (const auto& g : pulled)
        if (!radical_member(g, ideal, budget)) return false;
    return true;
}

RamificationData log_ramification(const Endomorphism& f, const Polynomial& form,
                                  const Budget& budget) {
    require_invariant_input(f, form, budget);
    RamificationData out;
    out.jac = jacobian_det(f.forms());
    if (out.jac.is_zero())
        throw std::logic_error("zero Jacobian for a validated endomorphism");

    // full multiplicity of F in jac
    Polynomial running = out.jac;
    for (;;) {
        auto q = exact_divide(running, form);
        if (!q) break;
        running = std::move(*q);
        ++out.divisor_multiplicity;
    }
    std::uint64_t needed = f.degree() - 1;
    out.effective = out.divisor_multiplicity >= needed;
    if (out.effective) {
        Polynomial residual = out.jac;
        for (std::uint64_t k = 0; k < needed; ++k) residual = *exact_divide(residual, form);
        out.log_residual = std::move(residual);
    }
    return out;
}

bool component_avoids_ramification(const RamificationData& ram, const Ideal& z_ideal,
                                   const Budget& budget) {
    if (!ram.effective)
        throw std::invalid_argument("ramification residual is not effective");
    if (ram.log_residual.is_constant() && !ram.log_residual.is_zero()) return true;
    return !radical_member(ram.log_residual, z_ideal, budget);
}

}  // namespace tidiv
