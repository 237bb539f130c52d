#include "rkc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rkc/errors.hpp"

namespace rkc {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw PreconditionError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw PreconditionError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const
{
    std::vector<int> out(static_cast<std::size_t>(first()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

bool Partition::contained_in(const Partition& other) const noexcept
{
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i] > other.part(i))
            return false;
    return true;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw PreconditionError("bad partition part '" + token + "'");
        }
        if (used != token.size())
            throw PreconditionError("bad partition part '" + token + "'");
        parts.push_back(v);
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '(' || c == ')')
            flush();
        else
            token.push_back(c);
    }
    flush();
    return Partition(std::move(parts));
}

Partition rectangle(int k, int a)
{
    if (k < 0 || a < 0)
        throw PreconditionError("rectangle sides must be nonnegative");
    return Partition(std::vector<int>(static_cast<std::size_t>(k == 0 ? 0 : a), k));
}

int min_prepend_size(const Partition& alpha) noexcept { return alpha.size() + alpha.first(); }

Partition prepend_first_part(const Partition& alpha, int n)
{
    const int head = n - alpha.size();
    if (head < alpha.first())
        throw PreconditionError("not yet stable-shaped: n - |alpha| = " + std::to_string(head) + " < alpha_1 = " +
                                std::to_string(alpha.first()));
    std::vector<int> parts;
    parts.reserve(alpha.length() + 1);
    parts.push_back(head);
    parts.insert(parts.end(), alpha.parts().begin(), alpha.parts().end());
    return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::size_t row, const std::optional<Partition>& inside,
                    std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    int top = std::min(remaining, max_part);
    if (inside)
        top = std::min(top, inside->part(row));
    for (int p = top; p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, row + 1, inside, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int p, const std::optional<Partition>& inside)
{
    if (p < 0)
        return {};
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(p, p, 0, inside, cur, out);
    return out;
}

Partition intersect(const Partition& lambda, const Partition& nu)
{
    std::vector<int> parts;
    const std::size_t len = std::min(lambda.length(), nu.length());
    for (std::size_t i = 0; i < len; ++i)
        parts.push_back(std::min(lambda[i], nu[i]));
    return Partition(std::move(parts));
}

} // namespace rkc
