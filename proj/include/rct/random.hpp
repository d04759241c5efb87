#ifndef RCT_RANDOM_HPP
#define RCT_RANDOM_HPP
//
// Project     : rct
// Module      : random
// Description : seeded generators for contractive tuples and unitary
//               frames; all draws are reproducible from the seed alone
//

#include <cstdint>
#include <random>

#include <rct/tuple.hpp>

namespace rct {

/// Deterministic uniform source over mt19937_64 bits; avoids the
/// distribution classes so streams are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// uniform in [-1, 1]
    double uniform();
    /// uniform integer in [lo, hi]
    int uniform_int(int lo, int hi);
    Complex complex_uniform();
    CMat complex_matrix(Index rows, Index cols);

private:
    std::mt19937_64 eng_;
};

/// Haar-ish random unitary from the QR of a random complex matrix,
/// phases fixed so the result is a deterministic function of the rng
/// state.
CMat random_unitary(Index n, Rng& rng);

/// Strictly contractive random tuple: the row is scaled to norm
/// 1 - 1e-3. Commuting mode draws polynomials in one random matrix, so
/// the commutators vanish identically.
OperatorTuple random_contractive_tuple(int arity, Index dim, bool commuting,
                                       std::uint64_t seed,
                                       const TolerancePolicy& tol = {});

} // namespace rct

#endif
