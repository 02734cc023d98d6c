#ifndef RCV_CONDORCET_HPP
#define RCV_CONDORCET_HPP

#include <optional>
#include <vector>

#include "rcv/profile.hpp"

namespace rcv {

// over(a, b) = number of voters ranking a above b. A ranked candidate is
// above every unranked one on the same ballot; two unranked candidates on a
// ballot contribute to neither direction.
class PairwiseMatrix {
public:
    PairwiseMatrix() = default;
    explicit PairwiseMatrix(std::vector<CandidateId> candidates);

    const std::vector<CandidateId> &candidates() const { return candidates_; }

    long long over(const CandidateId &a, const CandidateId &b) const;
    void add(const CandidateId &a, const CandidateId &b, long long n);
    long long &cell(std::size_t a, std::size_t b) { return over_[a * candidates_.size() + b]; }
    long long cell(std::size_t a, std::size_t b) const { return over_[a * candidates_.size() + b]; }

    // Unique candidate that strictly wins (loses) every head-to-head
    // matchup, or nullopt. Pairwise ties disqualify.
    std::optional<CandidateId> condorcet_winner() const;
    std::optional<CandidateId> condorcet_loser() const;

    bool operator==(const PairwiseMatrix &) const = default;

private:
    std::size_t index_of(const CandidateId &c) const;
    std::vector<CandidateId> candidates_; // sorted by id
    std::vector<long long> over_;         // row-major, candidates_.size()^2
};

// Full pairwise comparison matrix; parallelized over ballot types.
PairwiseMatrix pairwise_matrix(const PreferenceProfile &profile);

} // namespace rcv

#endif
