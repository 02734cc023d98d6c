#include "rcv/condorcet.hpp"

#include <algorithm>

#include "rcv/errors.hpp"

namespace rcv {

PairwiseMatrix::PairwiseMatrix(std::vector<CandidateId> candidates)
    : candidates_(std::move(candidates)), over_(candidates_.size() * candidates_.size(), 0) {
    if (!std::is_sorted(candidates_.begin(), candidates_.end()))
        std::sort(candidates_.begin(), candidates_.end());
}

std::size_t PairwiseMatrix::index_of(const CandidateId &c) const {
    auto it = std::lower_bound(candidates_.begin(), candidates_.end(), c);
    if (it == candidates_.end() || *it != c)
        throw RosterError("candidate '" + c + "' is not in the pairwise matrix");
    return static_cast<std::size_t>(it - candidates_.begin());
}

long long PairwiseMatrix::over(const CandidateId &a, const CandidateId &b) const {
    return cell(index_of(a), index_of(b));
}

void PairwiseMatrix::add(const CandidateId &a, const CandidateId &b, long long n) {
    cell(index_of(a), index_of(b)) += n;
}

std::optional<CandidateId> PairwiseMatrix::condorcet_winner() const {
    const std::size_t n = candidates_.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool wins_all = true;
        for (std::size_t j = 0; j < n && wins_all; ++j) {
            if (j != i && cell(i, j) <= cell(j, i))
                wins_all = false;
        }
        if (wins_all)
            return candidates_[i];
    }
    return std::nullopt;
}

std::optional<CandidateId> PairwiseMatrix::condorcet_loser() const {
    const std::size_t n = candidates_.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool loses_all = true;
        for (std::size_t j = 0; j < n && loses_all; ++j) {
            if (j != i && cell(i, j) >= cell(j, i))
                loses_all = false;
        }
        if (loses_all)
            return candidates_[i];
    }
    return std::nullopt;
}

PairwiseMatrix pairwise_matrix(const PreferenceProfile &profile) {
    std::vector<CandidateId> roster(profile.roster().begin(), profile.roster().end());
    const std::size_t n = roster.size();

    // Flatten ballot types once; each type becomes the index sequence of its
    // ranked candidates plus a count.
    struct Type {
        std::vector<std::size_t> order;
        long long count;
    };
    std::vector<Type> types;
    types.reserve(profile.tallies().size());
    for (const auto &[ballot, count] : profile.tallies()) {
        Type t;
        t.count = count;
        t.order.reserve(ballot.size());
        for (const auto &c : ballot.ranking()) {
            auto it = std::lower_bound(roster.begin(), roster.end(), c);
            t.order.push_back(static_cast<std::size_t>(it - roster.begin()));
        }
        types.push_back(std::move(t));
    }

    PairwiseMatrix m(roster);
    std::vector<long long> acc(n * n, 0);
#pragma omp parallel
    {
        std::vector<long long> local(n * n, 0);
#pragma omp for schedule(static) nowait
        for (long long ti = 0; ti < static_cast<long long>(types.size()); ++ti) {
            const Type &t = types[static_cast<std::size_t>(ti)];
            std::vector<bool> ranked(n, false);
            for (std::size_t a : t.order)
                ranked[a] = true;
            for (std::size_t i = 0; i < t.order.size(); ++i) {
                // above every later-ranked candidate
                for (std::size_t j = i + 1; j < t.order.size(); ++j)
                    local[t.order[i] * n + t.order[j]] += t.count;
                // above every unranked candidate
                for (std::size_t u = 0; u < n; ++u) {
                    if (!ranked[u])
                        local[t.order[i] * n + u] += t.count;
                }
            }
        }
#pragma omp critical
        {
            for (std::size_t i = 0; i < acc.size(); ++i)
                acc[i] += local[i];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m.cell(i, j) = acc[i * n + j];
    }
    return m;
}

} // namespace rcv
