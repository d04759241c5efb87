#include <rct/words.hpp>

#include <stdexcept>

namespace rct {

int MultiIndex::degree() const
{
    int sum = 0;
    for (int e : exponents)
        sum += e;
    return sum;
}

static void check_enum_args(int arity, int bound)
{
    if (arity < 1)
        throw std::invalid_argument("enumeration: arity must be >= 1");
    if (bound < 0)
        throw std::invalid_argument("enumeration: bound must be >= 0");
}

std::vector<Word> enumerate_words(int arity, int max_length)
{
    check_enum_args(arity, max_length);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(words_up_to(arity, max_length)));
    out.push_back(Word{});
    for (int len = 1; len <= max_length; ++len) {
        // count through all length-len words in base-d, most significant first
        std::vector<int> w(len, 1);
        for (;;) {
            out.push_back(Word{w});
            int pos = len - 1;
            while (pos >= 0 && w[pos] == arity)
                w[pos--] = 1;
            if (pos < 0)
                break;
            ++w[pos];
        }
    }
    return out;
}

static void fill_indices(int arity, int slot, int remaining,
                         std::vector<int>& cur, std::vector<MultiIndex>& out)
{
    if (slot == arity - 1) {
        cur[slot] = remaining;
        out.push_back(MultiIndex{cur});
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[slot] = e;
        fill_indices(arity, slot + 1, remaining - e, cur, out);
    }
}

std::vector<MultiIndex> enumerate_multi_indices(int arity, int max_degree)
{
    check_enum_args(arity, max_degree);
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(monomials_up_to(arity, max_degree)));
    std::vector<int> cur(arity, 0);
    for (int deg = 0; deg <= max_degree; ++deg)
        fill_indices(arity, 0, deg, cur, out);
    return out;
}

long long words_up_to(int arity, int max_length)
{
    check_enum_args(arity, max_length);
    long long total = 0, layer = 1;
    for (int k = 0; k <= max_length; ++k) {
        total += layer;
        layer *= arity;
    }
    return total;
}

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

long long monomials_up_to(int arity, int max_degree)
{
    check_enum_args(arity, max_degree);
    return binomial(max_degree + arity, arity);
}

long long max_defect_index(int arity, int steps, long long first_defect, Mode mode)
{
    if (arity < 1 || steps < 1)
        throw std::invalid_argument("max_defect_index: arity and steps must be >= 1");
    if (first_defect < 0)
        throw std::invalid_argument("max_defect_index: negative first defect index");
    const long long family = mode == Mode::commuting
        ? monomials_up_to(arity, steps - 1)
        : words_up_to(arity, steps - 1);
    return family * first_defect;
}

} // namespace rct
