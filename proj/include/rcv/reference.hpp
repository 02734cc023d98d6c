#ifndef RCV_REFERENCE_HPP
#define RCV_REFERENCE_HPP

#include "rcv/condorcet.hpp"
#include "rcv/cvr.hpp"
#include "rcv/pathology.hpp"

// Straight-line serial implementations of every parallel kernel. Kept as the
// comparison baseline for the test suite and the benchmark; results must be
// identical to the OpenMP versions on every input.
namespace rcv::reference {

PairwiseMatrix pairwise_matrix(const PreferenceProfile &profile);

std::vector<ParadoxWitness> find_spoilers(const PreferenceProfile &profile,
                                          TiePolicy tie_policy = TiePolicy::lexicographic_by_id);

std::optional<ParadoxWitness>
find_upward_monotonicity_witness(const PreferenceProfile &profile,
                                 TiePolicy tie_policy = TiePolicy::lexicographic_by_id);

std::optional<ParadoxWitness>
find_no_show_witness(const PreferenceProfile &profile,
                     TiePolicy tie_policy = TiePolicy::lexicographic_by_id);

std::vector<NormalizedRecord> normalize_records(const std::vector<RawBallotRecord> &records,
                                                const NormalizationRules &rules);

} // namespace rcv::reference

#endif
