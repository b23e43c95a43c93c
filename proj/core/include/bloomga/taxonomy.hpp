#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bloomga/rng.hpp"

namespace bloomga {

using KeywordId = std::uint32_t;

struct CognitiveLevel {
    std::string name;
    int rank = 0;  // 1 (Knowledge) .. 6 (Creation)
};

struct Keyword {
    std::string text;        // lowercase verb, no whitespace
    std::size_t level = 0;   // index into Taxonomy::levels()
};

/// Returns a description per violated invariant; empty means valid.
/// Reports, never throws, so callers can inspect arbitrary raw data.
std::vector<std::string> validate_taxonomy(const std::vector<CognitiveLevel>& levels,
                                           const std::vector<Keyword>& keywords);

/// The keyword alphabet the search runs over. Immutable once constructed,
/// safe to share across threads. Construction enforces all invariants:
/// unique ranks in 1..6, unique lowercase keywords, at least one keyword.
class Taxonomy {
public:
    Taxonomy(std::vector<CognitiveLevel> levels, std::vector<Keyword> keywords);

    /// Parse the sectioned text format:
    ///   [LevelName rank=N]
    ///   keyword, keyword, ...
    /// '#' starts a comment. Keywords are lowercased on load.
    static Taxonomy parse(std::string_view source);
    static Taxonomy load_file(const std::string& path);

    /// Inverse of parse() up to comments and spacing.
    std::string serialize() const;

    const std::vector<CognitiveLevel>& levels() const { return levels_; }
    const std::vector<Keyword>& keywords() const { return keywords_; }
    std::size_t size() const { return keywords_.size(); }

    const std::string& text(KeywordId id) const { return keywords_[id].text; }
    const CognitiveLevel& level_of(KeywordId id) const { return levels_[keywords_[id].level]; }
    std::optional<KeywordId> find(std::string_view keyword_text) const;

private:
    std::vector<CognitiveLevel> levels_;
    std::vector<Keyword> keywords_;
};

/// Uniform draw over the keyword alphabet; with include_empty, the EMPTY
/// sentinel (nullopt) is one extra equally likely outcome.
std::optional<KeywordId> sample_keyword(const Taxonomy& taxonomy, Rng& rng, bool include_empty);

/// The bundled 28-keyword, 6-level alphabet for programming courses.
const std::string& default_taxonomy_text();
const Taxonomy& default_taxonomy();

}  // namespace bloomga
