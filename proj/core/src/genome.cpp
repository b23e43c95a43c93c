#include "bloomga/genome.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "bloomga/errors.hpp"

namespace bloomga {

namespace {

bool contains_keyword(const std::vector<Gene>& genes, KeywordId id, std::size_t skip_slot) {
    for (std::size_t i = 0; i < genes.size(); ++i) {
        if (i == skip_slot) continue;
        if (!genes[i].is_empty() && genes[i].id == id) return true;
    }
    return false;
}

// Slot-wise parent merge with the duplicate fallback chain:
// chosen parent's gene, then the other parent's, then EMPTY.
template <typename KeepA>
std::vector<Gene> merge_parents(const Chromosome& a, const Chromosome& b, KeepA&& keep_a) {
    std::vector<Gene> child(a.genes.size());
    for (std::size_t i = 0; i < child.size(); ++i) {
        bool take_a = keep_a(i);
        const Gene& chosen = take_a ? a.genes[i] : b.genes[i];
        const Gene& other = take_a ? b.genes[i] : a.genes[i];
        if (chosen.is_empty() || !contains_keyword(child, chosen.id, i)) {
            child[i] = chosen;
        } else if (other.is_empty() || !contains_keyword(child, other.id, i)) {
            child[i] = other;
        } else {
            child[i] = Gene::empty();
        }
    }
    return child;
}

}  // namespace

std::size_t Chromosome::keyword_count() const {
    return static_cast<std::size_t>(
        std::count_if(genes.begin(), genes.end(), [](const Gene& g) { return !g.is_empty(); }));
}

std::vector<std::string> chromosome_violations(const Chromosome& c, std::size_t expected_slots) {
    std::vector<std::string> violations;
    if (c.genes.size() != expected_slots) {
        violations.push_back("length " + std::to_string(c.genes.size()) + " != " +
                             std::to_string(expected_slots));
    }
    std::unordered_set<KeywordId> seen;
    for (const Gene& g : c.genes) {
        if (g.is_empty()) continue;
        if (!seen.insert(g.id).second) {
            violations.push_back("duplicate keyword id " + std::to_string(g.id));
        }
    }
    if (seen.empty()) {
        violations.push_back("all genes are empty");
    }
    return violations;
}

bool chromosome_valid(const Chromosome& c, std::size_t expected_slots) {
    return chromosome_violations(c, expected_slots).empty();
}

Chromosome random_chromosome(const Taxonomy& taxonomy, std::size_t slots, Rng& rng) {
    if (slots < 1) throw EngineError("chromosome needs at least one slot");
    std::vector<Gene> genes(slots);
    for (std::size_t i = 0; i < slots; ++i) {
        for (;;) {
            std::optional<KeywordId> draw = sample_keyword(taxonomy, rng, /*include_empty=*/true);
            if (!draw) {
                genes[i] = Gene::empty();
                break;
            }
            if (!contains_keyword(genes, *draw, i)) {
                genes[i] = Gene(*draw);
                break;
            }
            // duplicate keyword: resample this slot
        }
    }
    return repair(std::move(genes), taxonomy, rng);
}

std::string canonical_key(const Taxonomy& taxonomy, const Chromosome& c) {
    std::vector<std::string> texts = ordered_keywords(taxonomy, c);
    std::sort(texts.begin(), texts.end());
    std::string key;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (i > 0) key += '|';
        key += texts[i];
    }
    return key;
}

std::vector<std::string> ordered_keywords(const Taxonomy& taxonomy, const Chromosome& c) {
    std::vector<std::string> texts;
    texts.reserve(c.genes.size());
    for (const Gene& g : c.genes) {
        if (!g.is_empty()) texts.push_back(taxonomy.text(g.id));
    }
    return texts;
}

std::vector<std::string> slot_texts(const Taxonomy& taxonomy, const Chromosome& c) {
    std::vector<std::string> texts;
    texts.reserve(c.genes.size());
    for (const Gene& g : c.genes) {
        texts.push_back(g.is_empty() ? std::string() : taxonomy.text(g.id));
    }
    return texts;
}

std::string chromosome_text(std::span<const std::string> slots) {
    std::string out = "[";
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i > 0) out += ", ";
        out += '\'';
        out += slots[i].empty() ? "    " : slots[i];
        out += '\'';
    }
    out += "]";
    return out;
}

Chromosome crossover_with_coins(const Chromosome& a, const Chromosome& b,
                                std::span<const bool> keep_a,
                                const Taxonomy& taxonomy, Rng& rng) {
    if (a.genes.size() != b.genes.size() || keep_a.size() != a.genes.size()) {
        throw EngineError("crossover requires equal-length parents and coin vector");
    }
    std::vector<Gene> child = merge_parents(a, b, [&](std::size_t i) { return keep_a[i]; });
    return repair(std::move(child), taxonomy, rng);
}

Chromosome crossover(const Chromosome& a, const Chromosome& b, double cr,
                     const Taxonomy& taxonomy, Rng& rng) {
    if (a.genes.size() != b.genes.size()) {
        throw EngineError("crossover requires equal-length parents");
    }
    // One coin per slot, drawn in slot order.
    std::vector<Gene> child = merge_parents(a, b, [&](std::size_t) { return chance(rng, cr); });
    return repair(std::move(child), taxonomy, rng);
}

Chromosome mutate(const Chromosome& c, double mr, const Taxonomy& taxonomy, Rng& rng) {
    std::vector<Gene> genes = c.genes;
    for (std::size_t i = 0; i < genes.size(); ++i) {
        if (!chance(rng, mr)) continue;
        for (;;) {
            std::optional<KeywordId> draw = sample_keyword(taxonomy, rng, /*include_empty=*/true);
            if (!draw) {
                genes[i] = Gene::empty();
                break;
            }
            if (!contains_keyword(genes, *draw, i)) {
                genes[i] = Gene(*draw);
                break;
            }
        }
    }
    return repair(std::move(genes), taxonomy, rng);
}

Chromosome repair(std::vector<Gene> genes, const Taxonomy& taxonomy, Rng& rng) {
    std::unordered_set<KeywordId> seen;
    bool any_keyword = false;
    for (Gene& g : genes) {
        if (g.is_empty()) continue;
        if (!seen.insert(g.id).second) {
            g = Gene::empty();  // keep the first occurrence
        } else {
            any_keyword = true;
        }
    }
    if (!any_keyword && !genes.empty()) {
        std::size_t slot = uniform_index(rng, genes.size());
        genes[slot] = Gene(static_cast<KeywordId>(uniform_index(rng, taxonomy.size())));
    }
    return Chromosome{std::move(genes)};
}

}  // namespace bloomga
