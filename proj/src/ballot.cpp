#include "rcv/ballot.hpp"

#include <algorithm>
#include <unordered_set>

#include "rcv/errors.hpp"

namespace rcv {

Ballot::Ballot(std::vector<CandidateId> ranking) : ranking_(std::move(ranking)) {
    std::unordered_set<std::string_view> seen;
    for (const auto &c : ranking_) {
        if (c.empty())
            throw Error("ballot contains an empty candidate id");
        if (!seen.insert(c).second)
            throw Error("ballot ranks candidate '" + c + "' twice");
    }
}

bool Ballot::ranks(const CandidateId &c) const {
    return std::find(ranking_.begin(), ranking_.end(), c) != ranking_.end();
}

std::optional<std::size_t> Ballot::position_of(const CandidateId &c) const {
    auto it = std::find(ranking_.begin(), ranking_.end(), c);
    if (it == ranking_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - ranking_.begin());
}

bool Ballot::prefers(const CandidateId &a, const CandidateId &b) const {
    auto pa = position_of(a);
    auto pb = position_of(b);
    if (pa && pb)
        return *pa < *pb;
    return pa.has_value() && !pb.has_value();
}

std::optional<CandidateId> Ballot::top_choice(const std::set<CandidateId> &eliminated) const {
    for (const auto &c : ranking_) {
        if (!eliminated.contains(c))
            return c;
    }
    return std::nullopt;
}

Ballot Ballot::without(const CandidateId &c) const {
    std::vector<CandidateId> out;
    out.reserve(ranking_.size());
    for (const auto &x : ranking_) {
        if (x != c)
            out.push_back(x);
    }
    Ballot b;
    b.ranking_ = std::move(out);
    return b;
}

} // namespace rcv
