#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bloomga/rng.hpp"
#include "bloomga/taxonomy.hpp"

namespace bloomga {

/// One chromosome slot: a taxonomy keyword or the EMPTY sentinel. EMPTY
/// exists only here; it is never part of a Taxonomy.
struct Gene {
    static constexpr KeywordId kEmpty = std::numeric_limits<KeywordId>::max();

    KeywordId id = kEmpty;

    Gene() = default;
    explicit Gene(KeywordId keyword) : id(keyword) {}
    static Gene empty() { return Gene{}; }

    bool is_empty() const { return id == kEmpty; }
    friend bool operator==(const Gene&, const Gene&) = default;
};

/// Fixed-length gene vector. Operators below maintain the invariants:
/// length n, no duplicate non-empty keywords, at least one non-empty gene.
struct Chromosome {
    std::vector<Gene> genes;

    std::size_t slot_count() const { return genes.size(); }
    std::size_t keyword_count() const;
    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

/// Empty iff the chromosome satisfies all invariants.
std::vector<std::string> chromosome_violations(const Chromosome& c, std::size_t expected_slots);
bool chromosome_valid(const Chromosome& c, std::size_t expected_slots);

/// Each slot drawn uniformly over keywords plus EMPTY, resampling draws
/// that would duplicate an earlier keyword; an all-empty result is repaired.
Chromosome random_chromosome(const Taxonomy& taxonomy, std::size_t slots, Rng& rng);

/// Unordered-set identity: sorted non-empty keyword texts joined with '|'.
/// Two chromosomes with the same keyword set share a key, whatever the
/// slot order. This is the fitness-cache key.
std::string canonical_key(const Taxonomy& taxonomy, const Chromosome& c);

/// Non-empty keyword texts in slot order (what the rephrase prompt lists).
std::vector<std::string> ordered_keywords(const Taxonomy& taxonomy, const Chromosome& c);

/// One text per slot, "" for EMPTY. Feed to chromosome_text() for display.
std::vector<std::string> slot_texts(const Taxonomy& taxonomy, const Chromosome& c);

/// Log/report rendering: ['kw1', 'kw2', 'kw3'], EMPTY slots as four spaces.
std::string chromosome_text(std::span<const std::string> slots);

/// Per slot, keep a's gene with probability cr, otherwise take b's. A gene
/// that would duplicate an already placed keyword falls back to the other
/// parent's gene at that slot, then to EMPTY. Result is repaired.
Chromosome crossover(const Chromosome& a, const Chromosome& b, double cr,
                     const Taxonomy& taxonomy, Rng& rng);

/// Deterministic variant for replaying a fixed coin sequence; keep_a[i]
/// true means slot i takes a's gene.
Chromosome crossover_with_coins(const Chromosome& a, const Chromosome& b,
                                std::span<const bool> keep_a,
                                const Taxonomy& taxonomy, Rng& rng);

/// Per slot, with probability mr replace the gene by a uniform draw over
/// keywords plus EMPTY, resampling draws that duplicate another slot.
Chromosome mutate(const Chromosome& c, double mr, const Taxonomy& taxonomy, Rng& rng);

/// Makes any raw gene vector valid: duplicates beyond the first occurrence
/// become EMPTY; an all-empty vector gets one uniformly chosen keyword in a
/// uniformly chosen slot. Idempotent, and the identity on valid input.
Chromosome repair(std::vector<Gene> genes, const Taxonomy& taxonomy, Rng& rng);

}  // namespace bloomga
