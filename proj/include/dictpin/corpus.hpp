#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dictpin {

struct WordEntry {
    std::string word;  // lowercase a-z only, non-empty
    double count = 0;  // > 0; raw occurrence count or any positive weight

    bool operator==(const WordEntry&) const = default;
};

// Column layout of a frequency-list file.
struct ListFormat {
    char separator = '\t';
    std::size_t word_column = 0;
    std::size_t count_column = 1;
    bool has_header = false;
    // Strict mode turns every rejected line into a ParseError.
    bool strict = false;

    // Throws ConfigError when the two columns coincide.
    void validate() const;
};

// Why lines were dropped while parsing.
struct ParseStats {
    std::size_t lines_read = 0;
    std::size_t blank = 0;
    std::size_t malformed = 0;       // missing column or bad count
    std::size_t rejected_words = 0;  // word did not normalize to a-z
    std::size_t merged = 0;          // accepted lines folded into an earlier entry

    std::size_t skipped() const noexcept { return malformed + rejected_words; }
};

// Normalized words with merged counts. Entries keep first-seen order; the
// word set is duplicate-free and total() tracks the compensated count sum.
class WordFrequencyList {
public:
    WordFrequencyList() = default;
    // Merges duplicates and validates every entry. Throws DomainError on a bad
    // word or count.
    WordFrequencyList(std::vector<WordEntry> entries, std::string source_label = {});

    const std::vector<WordEntry>& entries() const noexcept { return entries_; }
    double total() const noexcept { return total_; }
    const std::string& source_label() const noexcept { return label_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    // Count of a normalized word, 0 when absent.
    double count_of(std::string_view word) const;

    const ParseStats& stats() const noexcept { return stats_; }
    void set_stats(const ParseStats& s) { stats_ = s; }

    // Entries and label only; parse statistics are bookkeeping.
    bool operator==(const WordFrequencyList& o) const
    {
        return entries_ == o.entries_ && label_ == o.label_;
    }

private:
    std::vector<WordEntry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
    double total_ = 0;
    std::string label_;
    ParseStats stats_;
};

// Which word lengths a strategy accepts.
struct LengthPredicate {
    enum class Kind { any, exactly, at_least };
    Kind kind = Kind::any;
    std::size_t length = 0;

    static LengthPredicate any() { return {}; }
    static LengthPredicate exactly(std::size_t n) { return {Kind::exactly, n}; }
    static LengthPredicate at_least(std::size_t n) { return {Kind::at_least, n}; }

    bool operator()(std::size_t len) const noexcept
    {
        switch (kind) {
        case Kind::exactly: return len == length;
        case Kind::at_least: return len >= length;
        case Kind::any: break;
        }
        return true;
    }
};

// Canonical decomposition, combining marks dropped, lowercased. Returns
// nullopt unless the result is a non-empty a-z string.
std::optional<std::string> normalize_word(std::string_view raw);

WordFrequencyList parse_frequency_list(std::istream& in, const ListFormat& format,
                                       std::string source_label = {});
WordFrequencyList load_frequency_list(const std::filesystem::path& path, const ListFormat& format);

// Keeps entries with count > min_count whose length satisfies the predicate.
WordFrequencyList filter_list(const WordFrequencyList& list, double min_count,
                              LengthPredicate length_pred);

// Writes one "word<sep>count" line per entry with round-trippable counts.
void write_frequency_list(std::ostream& out, const WordFrequencyList& list, char separator = '\t');

}  // namespace dictpin
