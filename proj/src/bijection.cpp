#include "rkc/bijection.hpp"

#include <algorithm>
#include <sstream>

#include "rkc/errors.hpp"

namespace rkc {

ColumnTemplate column_template(int a, const Symbol& s)
{
    symbol_index(a, s); // validates membership
    ColumnTemplate c{s, s.weight, {}};
    if (s.weight == a + 1)
        return c;
    if (s.barred)
        c.entries.push_back(1);
    else
        c.entries.push_back(s.weight + 1);
    for (int v = s.weight + 2; v <= a + 1; ++v)
        c.entries.push_back(v);
    return c;
}

std::vector<ColumnTemplate> ordered_columns(const ColoredPartition& beta)
{
    std::vector<ColumnTemplate> cols;
    for (const auto& s : beta.parts())
        cols.push_back(column_template(beta.alphabet_parameter(), s));
    std::stable_sort(cols.begin(), cols.end(), [](const ColumnTemplate& x, const ColumnTemplate& y) {
        if (x.blue_height != y.blue_height)
            return x.blue_height > y.blue_height;
        return x.symbol.barred && !y.symbol.barred;
    });
    return cols;
}

Partition read_alpha(const ColoredPartition& beta)
{
    const int a = beta.alphabet_parameter();
    std::vector<int> alpha(static_cast<std::size_t>(a) + 1, 0);
    alpha[static_cast<std::size_t>(a)] = beta.multiplicity({a + 1, true});
    for (int i = a; i >= 2; --i)
        alpha[static_cast<std::size_t>(i - 1)] =
            alpha[static_cast<std::size_t>(i)] + beta.multiplicity({i, false}) + beta.multiplicity({i, true});
    alpha[0] = (a >= 1 ? alpha[1] : 0) + beta.multiplicity({1, true});
    return Partition(std::move(alpha));
}

Partition bijection_shape(int a, int k)
{
    if (k == 0)
        return {};
    return prepend_first_part(rectangle(k, a), (a + 3) * k);
}

BijectionResult colored_to_tableau(const ColoredPartition& beta, int k)
{
    if (beta.weight() != k)
        throw PreconditionError("colored_to_tableau: weight(beta) = " + std::to_string(beta.weight()) +
                                " but k = " + std::to_string(k));
    const int a = beta.alphabet_parameter();
    const Partition lambda = bijection_shape(a, k);
    const Partition alpha = read_alpha(beta);
    const auto cols = ordered_columns(beta);
    const int width = static_cast<int>(cols.size());

    SkewTableau t{lambda, alpha, {}};
    t.rows.resize(lambda.length());
    // Values still owed to the content of type lambda/alpha, index v-1.
    std::vector<int> owed(static_cast<std::size_t>(a) + 1, 0);
    for (std::size_t v = 0; v < lambda.length(); ++v)
        owed[v] = lambda[v] - alpha[v];

    auto place = [&](std::size_t row, int value) {
        t.rows[row].push_back(value);
        --owed[static_cast<std::size_t>(value - 1)];
    };
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < width; ++c) {
            const auto& col = cols[static_cast<std::size_t>(c)];
            if (static_cast<int>(r) >= col.blue_height)
                place(r, col.entries[r - static_cast<std::size_t>(col.blue_height)]);
        }
        if (r >= 1)
            for (int c = width; c < lambda[r]; ++c)
                place(r, static_cast<int>(r) + 1);
    }
    if (!lambda.empty()) {
        std::vector<int> rest;
        for (std::size_t v = 0; v < owed.size(); ++v) {
            if (owed[v] < 0)
                throw ArithmeticError("colored_to_tableau: content overdrawn for beta=" + beta.to_string());
            rest.insert(rest.end(), static_cast<std::size_t>(owed[v]), static_cast<int>(v) + 1);
        }
        if (rest.size() != static_cast<std::size_t>(lambda[0] - width))
            throw ArithmeticError("colored_to_tableau: first row does not fit for beta=" + beta.to_string());
        t.rows[0] = std::move(rest);
    }
    return {beta, alpha, KroneckerTableau{std::move(t), lambda}};
}

ColoredPartition tableau_to_colored(const KroneckerTableau& kt, int a)
{
    const SkewTableau& t = kt.tableau;
    const int k = t.outer.size() / (a + 3);
    if (t.outer.size() != k * (a + 3) || t.outer != bijection_shape(a, k) || kt.type != t.outer)
        throw NotInImageError("not in image: shape/type is not (3k,k^a) for a=" + std::to_string(a));
    if (t.inner.size() != k || !t.has_shape())
        throw NotInImageError("not in image: alpha is not a partition of k inside the shape");

    const int width = t.inner.first();
    std::vector<int> mult(alphabet(a).size(), 0);
    for (int c = 0; c < width; ++c) {
        int h = 0;
        while (static_cast<std::size_t>(h) < t.inner.length() && t.inner[static_cast<std::size_t>(h)] > c)
            ++h;
        std::vector<int> entries;
        for (std::size_t r = static_cast<std::size_t>(h); r < t.outer.length(); ++r)
            entries.push_back(t.at(r, c));
        bool matched = false;
        for (bool barred : {true, false}) {
            const Symbol s{h, barred};
            if (h == a + 1 && !barred)
                continue;
            if ((h == 1 && !barred) || h < 1 || h > a + 1)
                continue;
            if (column_template(a, s).entries == entries) {
                ++mult[symbol_index(a, s)];
                matched = true;
                break;
            }
        }
        if (!matched)
            throw NotInImageError("not in image: column " + std::to_string(c + 1) + " matches no template");
    }
    ColoredPartition beta(a, std::move(mult));
    if (beta.weight() != k || colored_to_tableau(beta, k).tableau != kt)
        throw NotInImageError("not in image: rebuilding from " + beta.to_string() + " gives a different tableau");
    return beta;
}

std::string render_ascii(const SkewTableau& t)
{
    int widest = 1;
    for (const auto& row : t.rows)
        for (int v : row)
            widest = std::max(widest, static_cast<int>(std::to_string(v).size()));
    std::ostringstream os;
    for (std::size_t r = 0; r < t.outer.length(); ++r) {
        for (int c = 0; c < t.outer[r]; ++c) {
            const std::string cell = c < t.inner[r] ? "*" : std::to_string(t.at(r, c));
            os << (c ? " " : "") << std::string(static_cast<std::size_t>(widest) - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace rkc
