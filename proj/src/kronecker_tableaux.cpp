#include "rkc/kronecker_tableaux.hpp"

#include <algorithm>

#include "rkc/characters.hpp"
#include "rkc/errors.hpp"

namespace rkc {

int SkewTableau::at(std::size_t row, int col) const noexcept
{
    if (row >= rows.size())
        return 0;
    const int start = inner.part(row);
    if (col < start || col >= outer.part(row))
        return 0;
    return rows[row][static_cast<std::size_t>(col - start)];
}

bool SkewTableau::has_shape() const noexcept
{
    if (!inner.contained_in(outer))
        return false;
    if (rows.size() != outer.length())
        return false;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (static_cast<int>(rows[r].size()) != outer.part(r) - inner.part(r))
            return false;
    return true;
}

std::vector<int> SkewTableau::content() const
{
    std::vector<int> c;
    for (const auto& row : rows)
        for (int v : row) {
            if (v <= 0)
                continue;
            if (static_cast<std::size_t>(v) > c.size())
                c.resize(static_cast<std::size_t>(v), 0);
            ++c[static_cast<std::size_t>(v - 1)];
        }
    return c;
}

std::vector<int> SkewTableau::reverse_reading_word() const
{
    std::vector<int> w;
    for (const auto& row : rows)
        w.insert(w.end(), row.rbegin(), row.rend());
    return w;
}

bool is_semistandard(const SkewTableau& t)
{
    if (!t.has_shape())
        return false;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const int start = t.inner.part(r);
        for (int c = start; c < t.outer.part(r); ++c) {
            const int v = t.at(r, c);
            if (v <= 0)
                return false;
            if (c > start && t.at(r, c - 1) > v)
                return false;
            if (r > 0 && c >= t.inner.part(r - 1) && t.at(r - 1, c) >= v)
                return false;
        }
    }
    return true;
}

bool is_alpha_lattice(std::span<const int> word, const Partition& alpha)
{
    int max_v = static_cast<int>(alpha.length());
    for (int v : word) {
        if (v <= 0)
            return false;
        max_v = std::max(max_v, v);
    }
    // level[i] = #i(prefix) + alpha_i, 1-based i.
    std::vector<long> level(static_cast<std::size_t>(max_v) + 2, 0);
    for (int i = 1; i <= max_v; ++i)
        level[static_cast<std::size_t>(i)] = alpha.part(static_cast<std::size_t>(i - 1));
    auto ok = [&](int i) { return level[static_cast<std::size_t>(i)] >= level[static_cast<std::size_t>(i + 1)]; };
    for (int i = 1; i <= max_v; ++i)
        if (!ok(i))
            return false;
    for (int v : word) {
        ++level[static_cast<std::size_t>(v)];
        // Only the pair (v-1, v) can have become violated.
        if (v >= 2 && !ok(v - 1))
            return false;
    }
    return true;
}

ExtraCondition extra_condition(const SkewTableau& t)
{
    ExtraCondition e;
    const int diff = t.inner.part(0) - t.inner.part(1);
    e.required = diff > 0;
    if (!e.required)
        return e;
    const auto count = [&](std::size_t row, int value) {
        if (row >= t.rows.size())
            return 0;
        return static_cast<int>(std::count(t.rows[row].begin(), t.rows[row].end(), value));
    };
    e.ones_in_row2 = count(1, 1) == diff;
    e.twos_in_row1 = count(0, 2) == diff;
    return e;
}

bool is_kronecker_tableau(const SkewTableau& t, const Partition& nu)
{
    if (!is_semistandard(t) || !t.inner.contained_in(nu) || t.outer.size() != nu.size())
        return false;
    const auto c = t.content();
    const std::size_t len = std::max(c.size(), nu.length());
    for (std::size_t i = 0; i < len; ++i) {
        const int have = i < c.size() ? c[i] : 0;
        if (have != nu.part(i) - t.inner.part(i))
            return false;
    }
    const auto word = t.reverse_reading_word();
    return is_alpha_lattice(word, t.inner) && extra_condition(t).holds();
}

namespace {

// Fills lambda/alpha cell by cell, rows top to bottom. Pruning:
//  - row weak increase and column strict increase against placed cells;
//  - an entry needs room for strictly larger entries in the cells below it;
//  - remaining content per value;
//  - the lattice condition, checked as each value is placed. Within a row the
//    reading order is right to left, so all of a row's (i+1)'s are read before
//    its i's; the binding check is prev[i] + alpha_i >= prev[i+1] + row[i+1] +
//    alpha_{i+1}, where prev counts earlier rows;
//  - the extra condition once rows 1 and 2 are complete.
class TableauSearch {
public:
    TableauSearch(const Partition& lambda, const Partition& alpha, const Partition& nu,
                  const std::function<void(const SkewTableau&)>& visit)
        : lambda_(lambda), alpha_(alpha), visit_(visit)
    {
        max_value_ = static_cast<int>(nu.length());
        remaining_.assign(static_cast<std::size_t>(max_value_) + 2, 0);
        for (int v = 1; v <= max_value_; ++v)
            remaining_[static_cast<std::size_t>(v)] = nu.part(static_cast<std::size_t>(v - 1)) -
                                                      alpha.part(static_cast<std::size_t>(v - 1));
        alpha_at_.assign(static_cast<std::size_t>(max_value_) + 2, 0);
        for (int v = 1; v <= max_value_ + 1; ++v)
            alpha_at_[static_cast<std::size_t>(v)] = alpha.part(static_cast<std::size_t>(v - 1));
        prev_.assign(static_cast<std::size_t>(max_value_) + 2, 0);
        row_count_.assign(static_cast<std::size_t>(max_value_) + 2, 0);
        tableau_.outer = lambda;
        tableau_.inner = alpha;
        tableau_.rows.resize(lambda.length());
        for (std::size_t r = 0; r < lambda.length(); ++r)
            tableau_.rows[r].assign(static_cast<std::size_t>(lambda[r] - alpha[r]), 0);
        diff_ = alpha[0] - alpha[1];
    }

    void run()
    {
        // The initial prefix (empty word) must already satisfy the lattice condition.
        for (int i = 1; i <= max_value_; ++i)
            if (alpha_at_[static_cast<std::size_t>(i)] < alpha_at_[static_cast<std::size_t>(i + 1)])
                return;
        row(0);
    }

private:
    void row(std::size_t r)
    {
        if ((r == 2 || r == lambda_.length()) && diff_ > 0 && !extra_condition(tableau_).holds())
            return;
        if (r == lambda_.length()) {
            visit_(tableau_);
            return;
        }
        std::fill(row_count_.begin(), row_count_.end(), 0);
        cell(r, alpha_[r]);
    }

    void end_row(std::size_t r)
    {
        for (std::size_t v = 0; v < prev_.size(); ++v)
            prev_[v] += row_count_[v];
        const auto saved = row_count_;
        row(r + 1);
        row_count_ = saved;
        for (std::size_t v = 0; v < prev_.size(); ++v)
            prev_[v] -= row_count_[v];
    }

    void cell(std::size_t r, int c)
    {
        if (c == lambda_[r]) {
            end_row(r);
            return;
        }
        auto& slot = tableau_.rows[r][static_cast<std::size_t>(c - alpha_[r])];
        int lo = 1;
        if (c > alpha_[r])
            lo = tableau_.rows[r][static_cast<std::size_t>(c - 1 - alpha_[r])];
        if (r > 0 && c >= alpha_[r - 1])
            lo = std::max(lo, tableau_.rows[r - 1][static_cast<std::size_t>(c - alpha_[r - 1])] + 1);
        int below = 0;
        for (std::size_t rr = r + 1; rr < lambda_.length() && c < lambda_[rr]; ++rr)
            ++below;
        const int hi = max_value_ - below;
        for (int v = lo; v <= hi; ++v) {
            const auto vi = static_cast<std::size_t>(v);
            if (remaining_[vi] == 0)
                continue;
            if (v >= 2 && prev_[vi - 1] + alpha_at_[vi - 1] < prev_[vi] + row_count_[vi] + 1 + alpha_at_[vi])
                continue;
            --remaining_[vi];
            ++row_count_[vi];
            slot = v;
            cell(r, c + 1);
            slot = 0;
            --row_count_[vi];
            ++remaining_[vi];
        }
    }

    const Partition& lambda_;
    const Partition& alpha_;
    const std::function<void(const SkewTableau&)>& visit_;
    int max_value_ = 0;
    int diff_ = 0;
    std::vector<int> remaining_;
    std::vector<int> alpha_at_;
    std::vector<int> prev_;
    std::vector<int> row_count_;
    SkewTableau tableau_;
};

void check_tableau_args(const Partition& lambda, const Partition& alpha, const Partition& nu)
{
    if (!alpha.contained_in(lambda) || !alpha.contained_in(nu))
        throw PreconditionError("Kronecker tableaux need alpha inside lambda and nu");
    if (lambda.size() != nu.size())
        throw PreconditionError("Kronecker tableaux need |lambda| == |nu|");
}

} // namespace

void for_each_kronecker_tableau(const Partition& lambda, const Partition& alpha, const Partition& nu,
                                const std::function<void(const SkewTableau&)>& visit)
{
    check_tableau_args(lambda, alpha, nu);
    TableauSearch(lambda, alpha, nu, visit).run();
}

std::vector<KroneckerTableau> enumerate_kronecker_tableaux(const Partition& lambda, const Partition& alpha,
                                                           const Partition& nu)
{
    std::vector<KroneckerTableau> out;
    for_each_kronecker_tableau(lambda, alpha, nu, [&](const SkewTableau& t) { out.push_back({t, nu}); });
    return out;
}

std::uint64_t count_kronecker_tableaux(const Partition& lambda, const Partition& alpha, const Partition& nu)
{
    std::uint64_t n = 0;
    for_each_kronecker_tableau(lambda, alpha, nu, [&](const SkewTableau&) { ++n; });
    return n;
}

std::vector<std::pair<Partition, std::uint64_t>> two_row_breakdown(const Partition& lambda, const Partition& nu,
                                                                    int p)
{
    const int n = lambda.size();
    if (nu.size() != n)
        throw PreconditionError("two_row_coefficient: |lambda| != |nu|");
    if (p < 0 || n < 2 * p || lambda.first() < 2 * p - 1)
        throw PreconditionError("lemma out of range: need n >= 2p and lambda_1 >= 2p-1 (n=" + std::to_string(n) +
                                ", p=" + std::to_string(p) + ", lambda_1=" + std::to_string(lambda.first()) + ")");
    std::vector<std::pair<Partition, std::uint64_t>> out;
    for (const auto& alpha : partitions_of(p, intersect(lambda, nu)))
        out.emplace_back(alpha, count_kronecker_tableaux(lambda, alpha, nu));
    return out;
}

BigInt two_row_coefficient(const Partition& lambda, const Partition& nu, int p)
{
    BigInt total = 0;
    for (const auto& [alpha, count] : two_row_breakdown(lambda, nu, p))
        total += static_cast<unsigned long>(count);
    return total;
}

int tableaux_evaluation_size(int a, int b, int k)
{
    if (a < b || b < 0 || k < 0)
        throw PreconditionError("need a >= b >= 0 and k >= 0");
    const Partition ra = rectangle(k, a), rb = rectangle(k, b), row = rectangle(k, 1);
    return std::max({oracle_evaluation_size(ra, rb, row), 2 * k, a * k + 2 * k - 1});
}

BigInt reduced_coeff_via_tableaux(int a, int b, int k)
{
    const int n = tableaux_evaluation_size(a, b, k);
    const Partition lambda = prepend_first_part(rectangle(k, a), n);
    const Partition nu = prepend_first_part(rectangle(k, b), n);
    return two_row_coefficient(lambda, nu, k);
}

} // namespace rkc
