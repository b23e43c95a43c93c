#include "bloomga/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bloomga/errors.hpp"

namespace bloomga {

namespace {

std::string trim(std::string_view s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return std::string(s.substr(begin, end - begin));
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool has_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

std::vector<std::string> validate_taxonomy(const std::vector<CognitiveLevel>& levels,
                                           const std::vector<Keyword>& keywords) {
    std::vector<std::string> violations;

    std::set<int> seen_ranks;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const CognitiveLevel& level = levels[i];
        if (level.name.empty()) {
            violations.push_back("level " + std::to_string(i) + " has an empty name");
        }
        if (level.rank < 1 || level.rank > 6) {
            violations.push_back("level '" + level.name + "' has rank " +
                                 std::to_string(level.rank) + ", outside 1..6");
        }
        if (!seen_ranks.insert(level.rank).second) {
            violations.push_back("rank " + std::to_string(level.rank) +
                                 " is assigned to more than one level");
        }
    }

    std::unordered_set<std::string> seen_texts;
    for (const Keyword& kw : keywords) {
        if (kw.text.empty()) {
            violations.push_back("empty keyword text");
            continue;
        }
        if (has_whitespace(kw.text)) {
            violations.push_back("keyword '" + kw.text + "' contains whitespace");
        }
        if (kw.level >= levels.size()) {
            violations.push_back("keyword '" + kw.text + "' references an unknown level");
        }
        if (!seen_texts.insert(to_lower(kw.text)).second) {
            violations.push_back("duplicate keyword '" + kw.text + "'");
        }
    }

    if (keywords.empty()) {
        violations.push_back("taxonomy contains no keywords");
    }
    return violations;
}

Taxonomy::Taxonomy(std::vector<CognitiveLevel> levels, std::vector<Keyword> keywords)
    : levels_(std::move(levels)), keywords_(std::move(keywords)) {
    std::vector<std::string> violations = validate_taxonomy(levels_, keywords_);
    if (!violations.empty()) {
        std::string message = "invalid taxonomy:";
        for (const std::string& v : violations) message += "\n  - " + v;
        throw ValidationError(message);
    }
}

Taxonomy Taxonomy::parse(std::string_view source) {
    std::vector<CognitiveLevel> levels;
    std::vector<Keyword> keywords;

    std::istringstream in{std::string(source)};
    std::string raw_line;
    std::size_t line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string line = raw_line;
        if (std::size_t hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError("taxonomy line " + std::to_string(line_no) +
                                 ": unterminated level header");
            }
            std::string header = trim(line.substr(1, line.size() - 2));
            std::size_t eq = header.rfind("rank=");
            if (eq == std::string::npos) {
                throw ParseError("taxonomy line " + std::to_string(line_no) +
                                 ": level header missing 'rank='");
            }
            std::string name = trim(header.substr(0, eq));
            std::string rank_text = trim(header.substr(eq + 5));
            if (name.empty()) {
                throw ParseError("taxonomy line " + std::to_string(line_no) +
                                 ": level header missing a name");
            }
            int rank = 0;
            try {
                std::size_t used = 0;
                rank = std::stoi(rank_text, &used);
                if (used != rank_text.size()) throw std::invalid_argument(rank_text);
            } catch (const std::exception&) {
                throw ParseError("taxonomy line " + std::to_string(line_no) +
                                 ": rank '" + rank_text + "' is not an integer");
            }
            levels.push_back(CognitiveLevel{name, rank});
            continue;
        }

        if (levels.empty()) {
            throw ParseError("taxonomy line " + std::to_string(line_no) +
                             ": keywords before the first level header");
        }
        std::stringstream fields{line};
        std::string field;
        while (std::getline(fields, field, ',')) {
            std::string text = to_lower(trim(field));
            if (text.empty()) continue;
            keywords.push_back(Keyword{text, levels.size() - 1});
        }
    }

    return Taxonomy(std::move(levels), std::move(keywords));
}

Taxonomy Taxonomy::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open taxonomy file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::string Taxonomy::serialize() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (i > 0) out << "\n";
        out << "[" << levels_[i].name << " rank=" << levels_[i].rank << "]\n";
        bool first = true;
        for (const Keyword& kw : keywords_) {
            if (kw.level != i) continue;
            if (!first) out << ", ";
            out << kw.text;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

std::optional<KeywordId> Taxonomy::find(std::string_view keyword_text) const {
    std::string needle = to_lower(trim(keyword_text));
    for (std::size_t i = 0; i < keywords_.size(); ++i) {
        if (keywords_[i].text == needle) return static_cast<KeywordId>(i);
    }
    return std::nullopt;
}

std::optional<KeywordId> sample_keyword(const Taxonomy& taxonomy, Rng& rng, bool include_empty) {
    std::size_t outcomes = taxonomy.size() + (include_empty ? 1 : 0);
    std::size_t draw = uniform_index(rng, outcomes);
    if (draw == taxonomy.size()) return std::nullopt;  // EMPTY
    return static_cast<KeywordId>(draw);
}

const Taxonomy& default_taxonomy() {
    static const Taxonomy taxonomy = Taxonomy::parse(default_taxonomy_text());
    return taxonomy;
}

}  // namespace bloomga
