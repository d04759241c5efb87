#include <rct/model_theta.hpp>

namespace rct {

namespace {

void check_zeros(const std::vector<Complex>& zeros)
{
    if (zeros.empty())
        throw std::invalid_argument("blaschke: need at least one zero (non-constant inner)");
    for (Complex a : zeros)
        if (!(std::abs(a) < 1.0))
            throw std::invalid_argument("blaschke: zero outside the open unit disc");
}

// multiply the series c (ascending) by (z - a) / (1 - conj(a) z), keeping n terms
std::vector<Complex> apply_factor(const std::vector<Complex>& c, Complex a)
{
    const std::size_t n = c.size();
    std::vector<Complex> num(n, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        num[k] -= a * c[k];
        if (k + 1 < n)
            num[k + 1] += c[k];
    }
    // divide by 1 - conj(a) z: out_k = num_k + conj(a) out_{k-1}
    std::vector<Complex> out(n, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k)
        out[k] = num[k] + (k > 0 ? std::conj(a) * out[k - 1] : Complex(0.0, 0.0));
    return out;
}

// series product truncated to the length of the first argument
std::vector<Complex> series_product(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    std::vector<Complex> out(a.size(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

double largest_modulus(const std::vector<Complex>& zeros)
{
    double r = 0.0;
    for (Complex a : zeros)
        r = std::max(r, std::abs(a));
    return r;
}

// columns kept when truncating { θ z^k } so the discarded tails stay
// below the rank tolerance
int tail_guard(double modulus, double rank_rtol)
{
    if (modulus == 0.0)
        return 0;
    return static_cast<int>(std::ceil(std::log(rank_rtol / 10.0) / (2.0 * std::log(modulus))));
}

} // namespace

std::vector<Complex> blaschke_taylor(const std::vector<Complex>& zeros, int n_terms)
{
    check_zeros(zeros);
    if (n_terms < 1)
        throw std::invalid_argument("blaschke_taylor: need at least one term");
    std::vector<Complex> c(static_cast<std::size_t>(n_terms), Complex(0.0, 0.0));
    c[0] = Complex(1.0, 0.0);
    for (Complex a : zeros)
        c = apply_factor(c, a);
    return c;
}

ModelSpaceTheta blaschke_model(const std::vector<Complex>& zeros, int degree_cap,
                               const TolerancePolicy& tol)
{
    check_zeros(zeros);
    const int m = static_cast<int>(zeros.size());
    if (degree_cap < 2 * m)
        throw std::invalid_argument("blaschke_model: degree cap below twice the Blaschke degree");

    ModelSpaceTheta model;
    model.zeros = zeros;
    model.degree_cap = degree_cap;
    model.taylor = blaschke_taylor(zeros, degree_cap + 1);

    // Takenaka-Malmquist-Walsh columns: normalized Cauchy kernel at a_j
    // times the product of the preceding Blaschke factors
    const std::size_t terms = static_cast<std::size_t>(degree_cap) + 1;
    CMat cols(degree_cap + 1, m);
    std::vector<Complex> prefix(terms, Complex(0.0, 0.0));
    prefix[0] = Complex(1.0, 0.0);
    for (int j = 0; j < m; ++j) {
        const Complex a = zeros[static_cast<std::size_t>(j)];
        std::vector<Complex> kernel(terms);
        Complex pw(1.0, 0.0);
        for (std::size_t k = 0; k < terms; ++k) {
            kernel[k] = pw;
            pw *= std::conj(a);
        }
        std::vector<Complex> column = series_product(prefix, kernel);
        const double scale = std::sqrt(1.0 - std::norm(a));
        for (Index r = 0; r <= degree_cap; ++r)
            cols(r, j) = scale * column[static_cast<std::size_t>(r)];
        prefix = apply_factor(prefix, a);
    }

    // re-orthonormalize: the truncation leaves O(|a|^N) tails
    CMat q = mgs_orthonormalize(cols, tol.rank_rtol);
    if (q.cols() != m)
        throw std::runtime_error("blaschke_model: model basis collapsed under truncation");
    model.basis = Subspace(degree_cap + 1, std::move(q), tol);

    OperatorTuple hardy_shift = dshift(1, degree_cap, tol);
    model.compression = model.basis.basis().adjoint() * hardy_shift.op(0) * model.basis.basis();
    return model;
}

OperatorTuple model_tuple(const ModelSpaceTheta& model, const TolerancePolicy& tol)
{
    return OperatorTuple::validate({model.compression}, true, tol);
}

double model_vector_residual(const ModelSpaceTheta& model, int i_max)
{
    if (i_max < 0)
        throw std::invalid_argument("model_vector_residual: negative index");
    const Index n = model.degree_cap + 1;
    const CMat& b = model.basis.basis();
    double worst = 0.0;
    for (int i = 0; i <= i_max && i <= model.degree_cap; ++i) {
        CVec direct = b * (b.adjoint() * CVec::Unit(n, i));

        // v_i = z^i - (sum_{k<=i} conj(theta_k) z^{i-k}) * theta
        std::vector<Complex> mult(static_cast<std::size_t>(i) + 1);
        for (int k = 0; k <= i; ++k)
            mult[static_cast<std::size_t>(i - k)] = std::conj(model.taylor[static_cast<std::size_t>(k)]);
        std::vector<Complex> correction = series_product(
            std::vector<Complex>(model.taylor.begin(), model.taylor.end()), mult);
        CVec formula = CVec::Unit(n, i);
        for (Index r = 0; r < n && r < static_cast<Index>(correction.size()); ++r)
            formula(r) -= correction[static_cast<std::size_t>(r)];

        worst = std::max(worst, (direct - formula).norm());
    }
    return worst;
}

SubmoduleBasis theta_submodule(const std::vector<Complex>& zeros, int degree_cap,
                               const TolerancePolicy& tol)
{
    check_zeros(zeros);
    const int m = static_cast<int>(zeros.size());
    const int guard = tail_guard(largest_modulus(zeros), tol.rank_rtol);
    const int top_power = degree_cap - m - guard;
    if (top_power < 1)
        throw std::invalid_argument("theta_submodule: degree cap too small for the tail guard ("
                                    + std::to_string(guard) + ")");

    std::vector<Complex> taylor = blaschke_taylor(zeros, degree_cap + 1);
    CMat cols = CMat::Zero(degree_cap + 1, top_power + 1);
    for (int k = 0; k <= top_power; ++k)
        for (int r = 0; r + k <= degree_cap; ++r)
            cols(r + k, k) = taylor[static_cast<std::size_t>(r)];

    SubmoduleBasis s;
    s.trunc = DATruncation(1, degree_cap);
    s.source = SubmoduleBasis::Source::theta;
    s.theta_zeros = zeros;
    s.max_generator_degree = m;
    s.certified_defect_depth = top_power - 1;
    s.basis = mgs_orthonormalize(cols, tol.rank_rtol);
    if (s.basis.cols() != top_power + 1)
        throw std::runtime_error("theta_submodule: column set collapsed under truncation");
    return s;
}

QuotientThetaReport quotient_theta_maximality(const std::vector<Complex>& zeros,
                                              int degree_cap, int horizon,
                                              const TolerancePolicy& tol)
{
    ModelSpaceTheta model = blaschke_model(zeros, degree_cap, tol);
    OperatorTuple r = model_tuple(model, tol);

    QuotientThetaReport report;
    report.model_dim = r.dim();
    report.minimal_poly = minimal_polynomial(r, tol);
    report.minimal_degree = static_cast<int>(report.minimal_poly.size()) - 1;
    if (auto ann = find_annihilator(r, horizon, Mode::commuting, tol))
        report.annihilator_degree = ann->degree;

    // numerator Π (z - a_j), monic ascending
    std::vector<Complex> numerator{Complex(1.0, 0.0)};
    for (Complex a : zeros) {
        std::vector<Complex> next(numerator.size() + 1, Complex(0.0, 0.0));
        for (std::size_t k = 0; k < numerator.size(); ++k) {
            next[k] -= a * numerator[k];
            next[k + 1] += numerator[k];
        }
        numerator = std::move(next);
    }
    double mismatch = 0.0;
    if (static_cast<std::size_t>(report.minimal_poly.size()) == numerator.size()) {
        for (std::size_t k = 0; k < numerator.size(); ++k)
            mismatch = std::max(mismatch,
                                std::abs(report.minimal_poly(static_cast<Index>(k)) - numerator[k]));
    } else {
        mismatch = std::numeric_limits<double>::infinity();
    }
    report.numerator_mismatch = mismatch;

    const bool degree_ok = report.minimal_degree == static_cast<int>(report.model_dim);
    const bool ann_ok = horizon >= static_cast<int>(report.model_dim)
        ? (report.annihilator_degree
           && *report.annihilator_degree == report.minimal_degree)
        : !report.annihilator_degree.has_value();
    report.aligned = degree_ok && ann_ok && mismatch < 1e-6;
    return report;
}

} // namespace rct
