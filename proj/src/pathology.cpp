#include "rcv/pathology.hpp"

#include <algorithm>

#include "rcv/errors.hpp"

namespace rcv {

namespace {

// -1, 0, +1 for b's placement of `a` against `x` (unranked below ranked,
// two unranked candidates incomparable).
int relation(const Ballot &b, const CandidateId &a, const CandidateId &x) {
    if (b.prefers(a, x))
        return 1;
    if (b.prefers(x, a))
        return -1;
    return 0;
}

// Replays always run under the lexicographic rule; a replay that needed the
// rule (any tied round) is rejected outright, so no witness depends on
// tie-breaking policy.
bool clean_replay(const PreferenceProfile &profile, RoundLog &out) {
    try {
        out = tabulate(profile, TiePolicy::lexicographic_by_id);
    } catch (const Error &) {
        return false;
    }
    return !out.any_tie();
}

struct ShiftFamily {
    Ballot from;
    Ballot to;
};

// All single-type moves that strictly raise w on an existing ballot type:
// remove w (if ranked) and re-insert it at any strictly earlier position;
// for types not ranking w, insert it anywhere.
std::vector<ShiftFamily> shift_families(const PreferenceProfile &profile, const CandidateId &w) {
    std::vector<ShiftFamily> families;
    for (const auto &[ballot, count] : profile.tallies()) {
        if (ballot.empty() || ballot.ranking().front() == w)
            continue;
        const Ballot others = ballot.without(w);
        const std::size_t limit = ballot.ranks(w) ? *ballot.position_of(w) : others.size() + 1;
        for (std::size_t p = 0; p < limit; ++p) {
            std::vector<CandidateId> target = others.ranking();
            target.insert(target.begin() + static_cast<std::ptrdiff_t>(p), w);
            Ballot to(std::move(target));
            if (support_strictly_improves(ballot, to, w, profile.roster()))
                families.push_back(ShiftFamily{ballot, std::move(to)});
        }
    }
    std::sort(families.begin(), families.end(), [](const ShiftFamily &a, const ShiftFamily &b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
    return families;
}

} // namespace

PreferenceProfile apply_modification(const PreferenceProfile &profile, const Modification &mod) {
    return std::visit(
        [&](const auto &m) -> PreferenceProfile {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, CandidateDeletion>)
                return profile.remove_candidate(m.candidate);
            else if constexpr (std::is_same_v<T, BallotShift>)
                return profile.with_shift(m.from, m.to, m.k);
            else
                return profile.with_removal(m.ranking, m.k);
        },
        mod);
}

bool support_strictly_improves(const Ballot &from, const Ballot &to, const CandidateId &w,
                               const std::set<CandidateId> &roster) {
    if (!to.ranks(w))
        return false;
    if (from.without(w) != to.without(w))
        return false;
    bool improved = false;
    for (const auto &x : roster) {
        if (x == w)
            continue;
        const int before = relation(from, w, x);
        const int after = relation(to, w, x);
        if (after < before)
            return false;
        if (after > before)
            improved = true;
    }
    return improved;
}

std::vector<ParadoxWitness> find_spoilers(const PreferenceProfile &profile,
                                          TiePolicy tie_policy) {
    const RoundLog base = tabulate(profile, tie_policy);
    if (base.any_tie())
        return {};
    const CandidateId w = base.winner;

    std::vector<CandidateId> losers;
    for (const auto &c : profile.roster()) {
        if (c != w)
            losers.push_back(c);
    }

    std::vector<std::optional<ParadoxWitness>> found(losers.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(losers.size()); ++i) {
        const CandidateId &c = losers[static_cast<std::size_t>(i)];
        RoundLog after;
        if (!clean_replay(profile.remove_candidate(c), after) || after.winner == w)
            continue;
        found[static_cast<std::size_t>(i)] =
            ParadoxWitness{WitnessKind::spoiler, CandidateDeletion{c}, w, after.winner,
                           base,                 after,                false};
    }

    std::vector<ParadoxWitness> witnesses;
    for (auto &f : found) {
        if (f)
            witnesses.push_back(std::move(*f));
    }
    return witnesses; // losers iterated in id order, so output is sorted
}

std::optional<ParadoxWitness> find_upward_monotonicity_witness(const PreferenceProfile &profile,
                                                               TiePolicy tie_policy) {
    const RoundLog base = tabulate(profile, tie_policy);
    if (base.any_tie())
        return std::nullopt;
    const CandidateId w = base.winner;

    const std::vector<ShiftFamily> families = shift_families(profile, w);

    struct Hit {
        long long k;
        RoundLog after;
    };
    std::vector<std::optional<Hit>> hits(families.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(families.size()); ++i) {
        const ShiftFamily &fam = families[static_cast<std::size_t>(i)];
        const long long n = profile.count_of(fam.from);
        for (long long k = 1; k <= n; ++k) {
            RoundLog after;
            if (!clean_replay(profile.with_shift(fam.from, fam.to, k), after))
                continue;
            if (after.winner != w) {
                hits[static_cast<std::size_t>(i)] = Hit{k, std::move(after)};
                break;
            }
        }
    }

    // Deterministic reduction: smallest k wins; families are already in
    // lexicographic (from, to) order, which breaks k ties.
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < families.size(); ++i) {
        if (hits[i] && (!best || hits[i]->k < hits[*best]->k))
            best = i;
    }
    if (!best)
        return std::nullopt;

    const ShiftFamily &fam = families[*best];
    Hit &hit = *hits[*best];
    return ParadoxWitness{WitnessKind::upward_monotonicity,
                          BallotShift{fam.from, fam.to, hit.k},
                          w,
                          hit.after.winner,
                          base,
                          std::move(hit.after),
                          !fam.from.ranks(w)};
}

std::optional<ParadoxWitness> find_no_show_witness(const PreferenceProfile &profile,
                                                   TiePolicy tie_policy) {
    const RoundLog base = tabulate(profile, tie_policy);
    if (base.any_tie())
        return std::nullopt;
    const CandidateId w = base.winner;

    // Families: ballot types whose voters rank somebody above the winner.
    std::vector<Ballot> types;
    for (const auto &[ballot, count] : profile.tallies()) {
        bool prefers_rival = false;
        for (const auto &x : profile.roster()) {
            if (x != w && ballot.prefers(x, w)) {
                prefers_rival = true;
                break;
            }
        }
        if (prefers_rival)
            types.push_back(ballot);
    }

    struct Hit {
        long long k;
        RoundLog after;
    };
    std::vector<std::optional<Hit>> hits(types.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(types.size()); ++i) {
        const Ballot &t = types[static_cast<std::size_t>(i)];
        const long long n = profile.count_of(t);
        for (long long k = 1; k <= n; ++k) {
            RoundLog after;
            if (!clean_replay(profile.with_removal(t, k), after))
                continue;
            if (after.winner != w && t.prefers(after.winner, w)) {
                hits[static_cast<std::size_t>(i)] = Hit{k, std::move(after)};
                break;
            }
        }
    }

    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (hits[i] && (!best || hits[i]->k < hits[*best]->k))
            best = i;
    }
    if (!best)
        return std::nullopt;

    Hit &hit = *hits[*best];
    return ParadoxWitness{WitnessKind::no_show,
                          BallotRemoval{types[*best], hit.k},
                          w,
                          hit.after.winner,
                          base,
                          std::move(hit.after),
                          false};
}

bool verify_witness(const PreferenceProfile &profile, const ParadoxWitness &witness,
                    TiePolicy tie_policy) {
    try {
        if (witness.new_winner == witness.original_winner)
            return false;

        const RoundLog base = tabulate(profile, tie_policy);
        if (base.any_tie() || base.winner != witness.original_winner)
            return false;

        RoundLog after;
        if (!clean_replay(apply_modification(profile, witness.modification), after))
            return false;
        if (after.winner != witness.new_winner)
            return false;

        switch (witness.kind) {
        case WitnessKind::spoiler: {
            const auto *del = std::get_if<CandidateDeletion>(&witness.modification);
            return del && del->candidate != witness.original_winner &&
                   del->candidate != witness.new_winner;
        }
        case WitnessKind::upward_monotonicity: {
            const auto *shift = std::get_if<BallotShift>(&witness.modification);
            return shift && support_strictly_improves(shift->from, shift->to,
                                                      witness.original_winner, profile.roster());
        }
        case WitnessKind::no_show: {
            const auto *rem = std::get_if<BallotRemoval>(&witness.modification);
            return rem && rem->ranking.prefers(witness.new_winner, witness.original_winner);
        }
        }
        return false;
    } catch (const Error &) {
        return false;
    }
}

} // namespace rcv
