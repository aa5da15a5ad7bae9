#include "springer/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace springer {

void ensure_within_cap(Int requested, Int cap) {
    if (requested > cap) throw CapExceededError(requested, cap);
}

Partition::Partition(std::vector<Int> values) : parts_(std::move(values)) {
    for (Int v : parts_) {
        if (v < 0) throw PreconditionError("partition parts must be nonnegative");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    weight_ = std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

bool is_in_xn(const Partition& p) noexcept {
    const auto& v = p.parts();
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        const std::size_t mult = j - i;
        if (v[i] % 2 != 0) {
            if (mult != 1) return false;
        } else {
            if (mult % 2 != 0) return false;
        }
        i = j;
    }
    return true;
}

XnElement::XnElement(Partition p) : partition_(std::move(p)) {
    if (!is_in_xn(partition_))
        throw PreconditionError("not a member of X_n: " + to_text(partition_));
}

namespace detail {

bool next_partition(std::vector<Int>& cur) {
    // Find the rightmost part above 1; everything after it is a tail of 1s.
    std::size_t k = cur.size();
    while (k > 0 && cur[k - 1] == 1) --k;
    if (k == 0) return false;
    --k;
    Int rem = static_cast<Int>(cur.size() - k - 1) + 1;
    const Int val = cur[k] - 1;
    cur.resize(k + 1);
    cur[k] = val;
    while (rem > val) {
        cur.push_back(val);
        rem -= val;
    }
    if (rem > 0) cur.push_back(rem);
    return true;
}

}  // namespace detail

std::vector<Partition> enumerate_partitions(Int n, Int cap) {
    ensure_within_cap(n, cap);
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<XnElement> enumerate_xn(Int n, Int cap) {
    ensure_within_cap(n, cap);
    std::vector<XnElement> out;
    for_each_partition(n, [&](const Partition& p) {
        if (is_in_xn(p)) out.push_back(XnElement(p));
    });
    return out;
}

std::vector<Bipartition> enumerate_bipartitions(Int m, Int cap) {
    ensure_within_cap(m, cap);
    std::vector<Bipartition> out;
    for_each_bipartition(m, [&](const Bipartition& bp) { out.push_back(bp); });
    return out;
}

std::string to_text(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

std::string to_text(const Bipartition& bp) {
    return to_text(bp.first) + "/" + to_text(bp.second);
}

namespace {

// Parses a comma-separated part list; offset shifts reported positions so
// errors inside a bipartition half point into the full input string.
Partition parse_parts(std::string_view text, std::size_t offset) {
    if (text.empty()) return Partition{};
    std::vector<Int> values;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                             : comma - pos);
        if (tok.empty()) throw ParseError("empty part", offset + pos + 1);
        Int value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
            throw ParseError("expected a nonnegative integer, got '" + std::string(tok) + "'",
                             offset + pos + 1);
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(values));
}

}  // namespace

Partition parse_partition(std::string_view text) { return parse_parts(text, 0); }

Bipartition parse_bipartition(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        throw ParseError("expected '/' between the two partitions", text.size() + 1);
    const std::size_t second = text.find('/', slash + 1);
    if (second != std::string_view::npos) throw ParseError("more than one '/'", second + 1);
    Partition first = parse_parts(text.substr(0, slash), 0);
    Partition rest = parse_parts(text.substr(slash + 1), slash + 1);
    return Bipartition{std::move(first), std::move(rest)};
}

}  // namespace springer
