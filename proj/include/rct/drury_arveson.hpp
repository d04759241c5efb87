#ifndef RCT_DRURY_ARVESON_HPP
#define RCT_DRURY_ARVESON_HPP
//
// Project     : rct
// Module      : drury_arveson
// Description : truncated Drury-Arveson space with exact monomial
//               weights, the d-shift, polynomial submodules and their
//               restriction tuples, defect/maximality experiments
//

#include <map>

#include <rct/maximality.hpp>

namespace rct {

/// Squared norm of the monomial z^alpha: alpha! / |alpha|!.
double da_weight(const MultiIndex& alpha);

/// Multinomial coefficient |alpha|! / alpha!, exact in integers.
long long multinomial(const MultiIndex& alpha);

/// Monomials of total degree <= degree_cap in canonical order, with
/// their squared norms. Index 0 is the constant.
class DATruncation {
public:
    DATruncation(int arity, int degree_cap);

    int arity() const { return arity_; }
    int degree_cap() const { return degree_cap_; }
    Index dim() const { return static_cast<Index>(basis_.size()); }
    const std::vector<MultiIndex>& basis() const { return basis_; }
    double weight(Index i) const { return weights_[static_cast<std::size_t>(i)]; }
    Index index_of(const MultiIndex& alpha) const;

private:
    int arity_;
    int degree_cap_;
    std::vector<MultiIndex> basis_;
    std::vector<double> weights_;
    std::map<std::vector<int>, Index> index_;
};

/// Coordinate-multiplication tuple compressed to degrees <= degree_cap,
/// expressed in the orthonormalized monomial basis. Commuting row
/// contraction.
OperatorTuple dshift(int arity, int degree_cap, const TolerancePolicy& tol = {});

/// A polynomial as a finite sum of monomial terms.
struct Polynomial {
    int arity = 0;
    std::vector<std::pair<MultiIndex, Complex>> terms;

    int degree() const;
    bool zero() const;
};

Polynomial monomial(int arity, const MultiIndex& alpha, Complex coef = Complex(1.0, 0.0));

/// Coordinates of p in the orthonormal monomial basis of the truncation.
CVec polynomial_coordinates(const DATruncation& trunc, const Polynomial& p);

/// Truncation of the submodule generated by polynomials (or, for d = 1,
/// by an inner function given through its zero list; see model_theta).
struct SubmoduleBasis {
    enum class Source { generators, theta };

    DATruncation trunc = DATruncation(1, 0);
    Source source = Source::generators;
    std::vector<Polynomial> generators;
    std::vector<Complex> theta_zeros;
    CMat basis;                       // orthonormal columns in truncation coordinates
    int max_generator_degree = 0;
    int certified_defect_depth = 0;   // steps unaffected by the truncation frontier
};

/// span{ z^beta p_i : |beta| + deg p_i <= degree_cap }, orthonormalized
/// by modified Gram-Schmidt in the weighted inner product.
SubmoduleBasis submodule_from_generators(std::vector<Polynomial> generators,
                                         int arity, int degree_cap,
                                         const TolerancePolicy& tol = {});

/// Rebuild the same submodule at a different degree cap.
SubmoduleBasis rebuild_with_cap(const SubmoduleBasis& s, int degree_cap,
                                const TolerancePolicy& tol = {});

/// Restriction of the d-shift to the submodule, in the submodule basis.
/// The commuting flag reflects the measured commutator residual (exact
/// for homogeneous data, frontier-limited otherwise).
OperatorTuple restricted_tuple(const SubmoduleBasis& s, const TolerancePolicy& tol = {});

struct SubmoduleDefect {
    CMat defect_sq;                 // I - Psi(I) in submodule coordinates
    Subspace first_defect_ambient = Subspace::zero(0); // lifted to truncation coordinates
    DefectProfile profile;
    int certified_depth = 0;        // entries past this are truncation-tainted
};

SubmoduleDefect submodule_defect(const SubmoduleBasis& s, int n_max,
                                 const TolerancePolicy& tol = {});

struct Delta1Stability {
    Index delta1 = 0;
    Index delta1_grown = 0; // recomputed with the degree cap raised by 2
    bool stable = false;
};

/// Detects first-defect dimensions that keep growing with the cap
/// (infinite-defect submodules); verdicts are refused in that case.
Delta1Stability submodule_delta1_stability(const SubmoduleBasis& s,
                                           const TolerancePolicy& tol = {});

struct RankOneCheck {
    double projection_residual = 0.0; // || P_S - sum M_phi M_phi^* || on the interior
    double defect_residual = 0.0;     // || D^2 - sum |phi><phi| || on the interior
    int interior_degree = 0;
};

/// Residuals of the rank-one decomposition identities for candidate
/// multiplier generators, evaluated away from the truncation frontier.
RankOneCheck rank_one_decomposition_check(const SubmoduleBasis& s,
                                          const std::vector<Polynomial>& phis,
                                          const TolerancePolicy& tol = {});

/// Commuting maximality verdict for the restriction tuple within the
/// certified window (no ambient cap; the true module is infinite
/// dimensional). Throws if the horizon exceeds the certified depth or
/// the first defect dimension fails the stability probe.
MaximalityVerdict submodule_maximality_experiment(const SubmoduleBasis& s, int horizon,
                                                  const TolerancePolicy& tol = {});

/// Null-space dimension of the kernel-adjoint family
/// { z^beta D xi_j : |beta| <= max_degree }; zero within the window iff
/// the submodule is maximal there.
Index submodule_poisson_test(const SubmoduleBasis& s, int max_degree,
                             const TolerancePolicy& tol = {});

} // namespace rct

#endif
