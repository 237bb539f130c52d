#include "rkc/colored_partition.hpp"

#include <sstream>

#include "rkc/errors.hpp"

namespace rkc {

std::string Symbol::to_string() const
{
    // U+0305 combining overline marks the barred copy.
    return std::to_string(weight) + (barred ? "̅" : "");
}

std::vector<Symbol> alphabet(int a)
{
    if (a < 1)
        throw PreconditionError("alphabet parameter a must be >= 1");
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(2 * a));
    out.push_back({1, true});
    for (int j = 2; j <= a; ++j) {
        out.push_back({j, false});
        out.push_back({j, true});
    }
    out.push_back({a + 1, true});
    return out;
}

std::size_t symbol_index(int a, const Symbol& s)
{
    if (s.weight == 1 && s.barred)
        return 0;
    if (s.weight == a + 1 && s.barred)
        return static_cast<std::size_t>(2 * a - 1);
    if (s.weight >= 2 && s.weight <= a)
        return static_cast<std::size_t>(2 * (s.weight - 2) + 1 + (s.barred ? 1 : 0));
    throw PreconditionError("symbol " + s.to_string() + " is not in the alphabet for a=" + std::to_string(a));
}

Symbol parse_symbol(const std::string& text)
{
    std::string digits;
    bool barred = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c >= '0' && c <= '9')
            digits.push_back(c);
        else if (c == 'b' || c == '\'')
            barred = true;
        else if (text.compare(i, 2, "̅") == 0 || text.compare(i, 2, "̄") == 0) {
            barred = true;
            ++i;
        } else
            throw PreconditionError("bad symbol '" + text + "'");
    }
    if (digits.empty())
        throw PreconditionError("bad symbol '" + text + "'");
    return {std::stoi(digits), barred};
}

ColoredPartition::ColoredPartition(int a) : ColoredPartition(a, std::vector<int>(alphabet(a).size(), 0)) {}

ColoredPartition::ColoredPartition(int a, std::vector<int> multiplicities) : a_(a), mult_(std::move(multiplicities))
{
    const auto letters = alphabet(a);
    if (mult_.size() != letters.size())
        throw PreconditionError("multiplicity vector length must be 2a");
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] < 0)
            throw PreconditionError("multiplicities must be nonnegative");
        weight_ += mult_[i] * letters[i].weight;
    }
}

ColoredPartition ColoredPartition::from_parts(int a, const std::vector<Symbol>& parts)
{
    std::vector<int> m(alphabet(a).size(), 0);
    for (const auto& s : parts)
        ++m[symbol_index(a, s)];
    return ColoredPartition(a, std::move(m));
}

int ColoredPartition::multiplicity(const Symbol& s) const { return mult_[symbol_index(a_, s)]; }

int ColoredPartition::num_parts() const noexcept
{
    int n = 0;
    for (int m : mult_)
        n += m;
    return n;
}

std::vector<Symbol> ColoredPartition::parts() const
{
    const auto letters = alphabet(a_);
    std::vector<Symbol> out;
    // Canonical order is lightest first with unbarred before barred, so walking
    // it backwards gives heaviest first, barred first.
    for (std::size_t i = letters.size(); i-- > 0;)
        for (int c = 0; c < mult_[i]; ++c)
            out.push_back(letters[i]);
    return out;
}

std::string ColoredPartition::to_string() const
{
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& s : parts()) {
        os << (first ? "" : ",") << s.to_string();
        first = false;
    }
    os << ')';
    return os.str();
}

namespace {

struct ColoredWalker {
    std::vector<Symbol> letters;
    std::optional<MultiplicityBound> bound;
    const std::function<void(const ColoredPartition&)>& visit;
    int a;
    std::vector<int> mult;

    void rec(std::size_t remaining_letters, int remaining)
    {
        if (remaining == 0) {
            visit(ColoredPartition(a, mult));
            return;
        }
        if (remaining_letters == 0)
            return;
        const std::size_t idx = remaining_letters - 1;
        const int w = letters[idx].weight;
        int top = remaining / w;
        if (bound)
            top = std::min(top, bound->max_multiplicity(w));
        for (int m = top; m >= 0; --m) {
            mult[idx] = m;
            rec(idx, remaining - m * w);
        }
        mult[idx] = 0;
    }
};

} // namespace

void for_each_colored_partition(int k, int a, const std::optional<MultiplicityBound>& bound,
                                const std::function<void(const ColoredPartition&)>& visit)
{
    if (a < 1)
        throw PreconditionError("alphabet parameter a must be >= 1");
    if (k < 0)
        return;
    ColoredWalker w{alphabet(a), bound, visit, a, std::vector<int>(static_cast<std::size_t>(2 * a), 0)};
    w.rec(w.letters.size(), k);
}

std::vector<ColoredPartition> colored_partitions_of(int k, int a, const std::optional<MultiplicityBound>& bound)
{
    std::vector<ColoredPartition> out;
    for_each_colored_partition(k, a, bound, [&](const ColoredPartition& c) { out.push_back(c); });
    return out;
}

std::vector<BigInt> colored_partition_counts(int max_k, int a, const std::optional<MultiplicityBound>& bound)
{
    if (a < 1)
        throw PreconditionError("alphabet parameter a must be >= 1");
    if (max_k < 0)
        return {};
    const auto n = static_cast<std::size_t>(max_k) + 1;
    std::vector<BigInt> ways(n, 0);
    ways[0] = 1;
    for (const auto& s : alphabet(a)) {
        const auto w = static_cast<std::size_t>(s.weight);
        std::vector<BigInt> next(n, 0);
        for (std::size_t k = 0; k < n; ++k) {
            if (ways[k] == 0)
                continue;
            std::size_t used = 0;
            for (std::size_t kk = k; kk < n; kk += w, ++used) {
                if (bound && used > static_cast<std::size_t>(bound->max_multiplicity(s.weight)))
                    break;
                next[kk] += ways[k];
            }
        }
        ways = std::move(next);
    }
    return ways;
}

} // namespace rkc
