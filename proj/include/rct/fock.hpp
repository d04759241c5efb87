#ifndef RCT_FOCK_HPP
#define RCT_FOCK_HPP
//
// Project     : rct
// Module      : fock
// Description : truncated full Fock space, compressed creation tuples,
//               the dilation (Poisson) kernel and its identities, and
//               the pure-tuple maximality equivalence battery
//

#include <map>
#include <string>

#include <rct/maximality.hpp>

namespace rct {

/// Truncated full Fock space over C^d: words of length <= depth in
/// canonical order; index 0 is the vacuum.
class FockTruncation {
public:
    FockTruncation(int arity, int depth);

    int arity() const { return arity_; }
    int depth() const { return depth_; }
    Index dim() const { return static_cast<Index>(basis_.size()); }
    const std::vector<Word>& basis() const { return basis_; }
    Index index_of(const Word& f) const;

private:
    int arity_;
    int depth_;
    std::vector<Word> basis_;
    std::map<std::vector<int>, Index> index_;
};

/// Creation operators compressed to the truncation: e_f -> e_{i.f} for
/// |f| < depth, 0 on the top layer.
OperatorTuple creation_tuple(int arity, int depth, const TolerancePolicy& tol = {});

/// Coordinate subspace spanned by words of length <= n.
Subspace particle_space(const FockTruncation& fock, int n);

/// Compression P_Q S_i |_Q expressed in Q's basis. Q must be co-invariant
/// for the truncated creation tuple; the violation residual is reported
/// in the exception message otherwise.
OperatorTuple compress_to_coinvariant(int arity, int depth, const Subspace& q,
                                      const TolerancePolicy& tol = {});

/// The dilation kernel of a tuple at truncation depth N. Block row
/// (f, j) holds xi_j^* D_T T_f^*, word-major.
struct PoissonKernel {
    CMat k;
    int depth = 0;
    Subspace d1 = Subspace::zero(0);
    FockTruncation fock = FockTruncation(1, 0);
};

PoissonKernel poisson_kernel(const OperatorTuple& t, int depth,
                             const TolerancePolicy& tol = {});

/// T_f D_T xi; the column action of the kernel adjoint on e_f (x) xi.
CVec poisson_adjoint_apply(const OperatorTuple& t, const Word& f,
                           const Eigen::Ref<const CVec>& xi,
                           const TolerancePolicy& tol = {});

/// dim of (particle_space(n) (x) D_1) ∩ ker K^*.
Index kernel_intersection_dim(const PoissonKernel& pk, int n,
                              const TolerancePolicy& tol = {});
Index kernel_intersection_dim(const OperatorTuple& t, int n, int depth,
                              const TolerancePolicy& tol = {});

/// ||K^* K - (I - Psi^{N+1}(I))||_F
double poisson_gram_residual(const OperatorTuple& t, const PoissonKernel& pk);

/// max_i || K T_i^* - (S_i^* (x) I) K || over block rows of length < N.
double poisson_intertwining_residual(const OperatorTuple& t, const PoissonKernel& pk);

/// Input for the battery's compression-rank condition: a co-invariant
/// subspace of a Fock truncation realizing the tuple.
struct CompressionData {
    FockTruncation fock;
    Subspace q;
};

/// Consistency battery for pure tuples: the maximality verdict, the
/// absence of annihilators, and triviality of the kernel intersection
/// must agree, degree window limited to families that fit the ambient
/// dimension. When compression data is supplied the particle-layer
/// ranks of P_Q are checked as well.
struct BatteryReport {
    bool hypotheses_ok = false;
    std::string skip_reason;
    Index delta1 = 0;
    double purity_final = 0.0;
    std::vector<int> window;
    bool maximal = false;
    bool annihilator_free = false;
    bool kernel_trivial = false;
    std::vector<Index> compression_ranks;
    std::vector<long long> compression_expected;
    bool compression_checked = false;
    bool compression_consistent = false;
    bool coherent = false;
};

BatteryReport maximality_battery(const OperatorTuple& t, int horizon,
                                 const CompressionData* compression = nullptr,
                                 const TolerancePolicy& tol = {});

} // namespace rct

#endif
