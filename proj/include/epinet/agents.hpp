#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "epinet/core.hpp"

namespace epinet {

struct Scientist {
    int id = 0;
    Credence credence;
};

struct PolicyMaker {
    int id = 0;
    Credence credence;
    std::vector<int> listens_to;  // sorted scientist ids; empty under a journalist
};

// ----------------------------- curation modes --------------------------------

struct NoCuration {
    bool operator==(const NoCuration&) const = default;
};

/// Rebroadcast every A-leaning result the community produced this round.
struct SelectiveSharing {
    bool operator==(const SelectiveSharing&) const = default;
};

/// Run floor(resources / study_size) honest studies of size study_size each
/// round and publish only those that came out A-leaning. Leftover draws
/// (resources mod study_size) are discarded so every study has equal size.
struct BiasedProduction {
    int resources = 0;   // total draws available per round
    int study_size = 0;  // draws per study

    int studies_per_round() const { return resources / study_size; }
    bool operator==(const BiasedProduction&) const = default;
};

enum class JournalistMode : std::uint8_t { fair, random, all };

struct Journalism {
    JournalistMode mode = JournalistMode::all;
    bool operator==(const Journalism&) const = default;
};

using CurationMode =
    std::variant<NoCuration, SelectiveSharing, BiasedProduction, Journalism>;

inline bool is_journalist(const CurationMode& mode) {
    return std::holds_alternative<Journalism>(mode);
}

// --------------------------------- results -----------------------------------

/// A study result tagged with who produced it. Producer kExternal marks
/// studies the curation agent ran itself.
struct AttributedResult {
    static constexpr int kExternal = -1;

    StudyResult result;
    int producer = kExternal;
};

/// The fair-mode journalist's fallback for rounds where one side produced
/// nothing: the result last shared for that side.
struct JournalistMemory {
    std::optional<AttributedResult> last_a;
    std::optional<AttributedResult> last_b;
};

// -------------------------------- operations ---------------------------------

/// B iff credence > 0.5. The exact 0.5 tie acts as A, the known arm.
Arm select_action(Credence credence);

/// The A-leaning subset of this round's arm-B results, order preserved.
/// Ties lean neither way and are never shared.
std::vector<AttributedResult> selective_share(
    std::span<const AttributedResult> round_results);

/// One round of propagandist-run studies: draws from arm B like any honest
/// scientist, publishes only the A-leaning ones.
std::vector<AttributedResult> biased_production_round(
    const BiasedProduction& mode, EffectSize effect, Rng& rng);

struct JournalistShare {
    std::vector<AttributedResult> shared;
    JournalistMemory memory;
};

/// Journalist curation over this round's arm-B results.
///   all:    everything.
///   random: two picks without replacement (all of them if fewer than two).
///   fair:   one uniform pick per side; a side empty this round falls back to
///           memory; a side that never produced is simply absent. Neutral
///           results belong to neither side.
JournalistShare journalist_share(JournalistMode mode,
                                 std::span<const AttributedResult> round_results,
                                 const JournalistMemory& memory, Rng& rng);

enum class ListenerPattern : std::uint8_t { random_distinct, shared_prefix };

/// Scientist ids each policy maker listens to. random_distinct: independent
/// uniform k-subsets; shared_prefix: everyone listens to scientists 0..k-1.
std::vector<std::vector<int>> assign_listeners(int num_scientists, int listen_count,
                                               ListenerPattern pattern,
                                               int num_policy_makers, Rng& rng);

/// One policy maker's posterior after a round. Evidence is the arm-B results
/// of listened-to scientists plus the curated stream; with dedup on, curated
/// results whose producer is already listened to count once instead of twice.
/// An empty listens_to (journalist regime) leaves the curated stream as the
/// only evidence.
Credence policy_update(const PolicyMaker& pm,
                       std::span<const AttributedResult> round_results,
                       std::span<const AttributedResult> curated, bool dedup,
                       EffectSize effect);

}  // namespace epinet
