#ifndef RCV_BALLOT_HPP
#define RCV_BALLOT_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rcv {

// Candidate identity is the exact display string. No fuzzy matching.
using CandidateId = std::string;

// A duplicate-free, possibly truncated strict ranking of candidates.
// An empty ranking is a valid value (it arises when a candidate is removed
// from a bullet ballot); it never contributes to any tally.
class Ballot {
public:
    Ballot() = default;
    explicit Ballot(std::vector<CandidateId> ranking);

    const std::vector<CandidateId> &ranking() const { return ranking_; }
    bool empty() const { return ranking_.empty(); }
    std::size_t size() const { return ranking_.size(); }

    bool ranks(const CandidateId &c) const;
    std::optional<std::size_t> position_of(const CandidateId &c) const;

    // True iff a is strictly above b on this ballot. A ranked candidate is
    // above every unranked one; two unranked candidates are incomparable.
    bool prefers(const CandidateId &a, const CandidateId &b) const;

    // Highest-ranked candidate not in `eliminated`, or nullopt if the
    // ballot is exhausted.
    std::optional<CandidateId> top_choice(const std::set<CandidateId> &eliminated) const;

    // Copy of this ballot with candidate c deleted, order preserved.
    Ballot without(const CandidateId &c) const;

    friend auto operator<=>(const Ballot &, const Ballot &) = default;

private:
    std::vector<CandidateId> ranking_;
};

} // namespace rcv

#endif
