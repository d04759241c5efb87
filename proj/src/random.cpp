#include <rct/random.hpp>

namespace rct {

double Rng::uniform()
{
    // 53 uniform bits mapped into [-1, 1]
    const double u = static_cast<double>(eng_() >> 11) * 0x1p-53;
    return 2.0 * u - 1.0;
}

int Rng::uniform_int(int lo, int hi)
{
    if (hi < lo)
        throw std::invalid_argument("Rng::uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
}

Complex Rng::complex_uniform()
{
    const double re = uniform();
    const double im = uniform();
    return Complex(re, im);
}

CMat Rng::complex_matrix(Index rows, Index cols)
{
    CMat a(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            a(i, j) = complex_uniform();
    return a;
}

CMat random_unitary(Index n, Rng& rng)
{
    CMat a = rng.complex_matrix(n, n);
    Eigen::HouseholderQR<CMat> qr(a);
    CMat q = qr.householderQ();
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0.0)
            q.col(j) *= d / std::abs(d);
    }
    return q;
}

OperatorTuple random_contractive_tuple(int arity, Index dim, bool commuting,
                                       std::uint64_t seed, const TolerancePolicy& tol)
{
    if (arity < 1 || dim < 1)
        throw std::invalid_argument("random_contractive_tuple: arity and dim must be >= 1");
    Rng rng(seed);

    std::vector<CMat> raw;
    raw.reserve(static_cast<std::size_t>(arity));
    if (commuting) {
        // polynomials in one matrix commute identically
        const CMat a = rng.complex_matrix(dim, dim);
        std::vector<CMat> powers{CMat::Identity(dim, dim)};
        for (int k = 1; k <= 3; ++k)
            powers.push_back(powers.back() * a);
        for (int i = 0; i < arity; ++i) {
            CMat g = CMat::Zero(dim, dim);
            for (const CMat& p : powers)
                g += rng.complex_uniform() * p;
            raw.push_back(std::move(g));
        }
    } else {
        for (int i = 0; i < arity; ++i)
            raw.push_back(rng.complex_matrix(dim, dim));
    }

    CMat gram = CMat::Zero(dim, dim);
    for (const CMat& g : raw)
        gram += g * g.adjoint();
    const double row = std::sqrt(hermitian_norm(gram));
    const double scale = row > 1e-12 ? (1.0 - 1e-3) / row : 0.0;
    for (CMat& g : raw)
        g *= scale;
    return OperatorTuple::validate(std::move(raw), commuting, tol);
}

} // namespace rct
