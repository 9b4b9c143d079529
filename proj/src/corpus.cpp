#include "dictpin/corpus.hpp"

#include "dictpin/error.hpp"
#include "dictpin/numeric.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace dictpin {

namespace {

bool is_valid_word(std::string_view w)
{
    if (w.empty())
        return false;
    for (char c : w)
        if (c < 'a' || c > 'z')
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    constexpr std::string_view ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// A space separator means "any run of blanks"; other separators split exactly.
std::vector<std::string_view> split_fields(std::string_view line, char sep)
{
    std::vector<std::string_view> fields;
    if (sep == ' ') {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                ++i;
            if (i == line.size())
                break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t')
                ++j;
            fields.push_back(line.substr(i, j - i));
            i = j;
        }
        return fields;
    }
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return fields;
}

std::optional<double> parse_count(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value) || value <= 0)
        return std::nullopt;
    return value;
}

}  // namespace

void ListFormat::validate() const
{
    if (word_column == count_column)
        throw ConfigError("word and count columns must differ");
    if (separator == '\n' || separator == '\r')
        throw ConfigError("line terminators cannot be column separators");
}

WordFrequencyList::WordFrequencyList(std::vector<WordEntry> entries, std::string source_label)
    : label_(std::move(source_label))
{
    entries_.reserve(entries.size());
    for (auto& e : entries) {
        if (!is_valid_word(e.word))
            throw DomainError("word must be non-empty a-z: '" + e.word + "'");
        if (!std::isfinite(e.count) || e.count <= 0)
            throw DomainError("count must be positive for '" + e.word + "'");
        const auto [it, inserted] = index_.try_emplace(e.word, entries_.size());
        if (inserted)
            entries_.push_back(std::move(e));
        else
            entries_[it->second].count += e.count;
    }
    CompensatedSum sum;
    for (const auto& e : entries_)
        sum += e.count;
    total_ = sum.value();
}

double WordFrequencyList::count_of(std::string_view word) const
{
    const auto it = index_.find(std::string(word));
    return it == index_.end() ? 0.0 : entries_[it->second].count;
}

std::optional<std::string> normalize_word(std::string_view raw)
{
    bool ascii = true;
    for (char c : raw)
        if (static_cast<unsigned char>(c) >= 0x80) {
            ascii = false;
            break;
        }

    std::string out;
    if (ascii) {
        out.reserve(raw.size());
        for (char c : raw) {
            if (c >= 'A' && c <= 'Z')
                c = static_cast<char>(c - 'A' + 'a');
            out.push_back(c);
        }
    } else {
        UErrorCode status = U_ZERO_ERROR;
        const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
        if (U_FAILURE(status))
            return std::nullopt;
        icu::UnicodeString decomposed =
            nfd->normalize(icu::UnicodeString::fromUTF8(icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size()))),
                           status);
        if (U_FAILURE(status))
            return std::nullopt;
        icu::UnicodeString stripped;
        for (int32_t i = 0; i < decomposed.length();) {
            const UChar32 cp = decomposed.char32At(i);
            if ((U_GET_GC_MASK(cp) & U_GC_M_MASK) == 0)
                stripped.append(cp);
            i += U16_LENGTH(cp);
        }
        stripped.toLower(icu::Locale::getRoot());
        stripped.toUTF8String(out);
    }

    if (!is_valid_word(out))
        return std::nullopt;
    return out;
}

WordFrequencyList parse_frequency_list(std::istream& in, const ListFormat& format, std::string source_label)
{
    format.validate();
    ParseStats stats;
    std::vector<WordEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    const std::size_t needed = std::max(format.word_column, format.count_column) + 1;

    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && format.has_header)
            continue;
        ++stats.lines_read;
        if (lineno == 1 && line.starts_with("\xEF\xBB\xBF"))
            line.erase(0, 3);
        if (trim(line).empty()) {
            ++stats.blank;
            continue;
        }
        std::string_view view(line);
        if (view.ends_with('\r'))
            view.remove_suffix(1);

        const auto fields = split_fields(view, format.separator);
        if (fields.size() < needed) {
            if (format.strict)
                throw ParseError("expected at least " + std::to_string(needed) + " columns", lineno);
            ++stats.malformed;
            continue;
        }
        const auto count = parse_count(fields[format.count_column]);
        if (!count) {
            if (format.strict)
                throw ParseError("count is not a positive number: '" + std::string(trim(fields[format.count_column])) +
                                     "'",
                                 lineno);
            ++stats.malformed;
            continue;
        }
        auto word = normalize_word(trim(fields[format.word_column]));
        if (!word) {
            if (format.strict)
                throw ParseError("word does not normalize to a-z: '" +
                                     std::string(trim(fields[format.word_column])) + "'",
                                 lineno);
            ++stats.rejected_words;
            continue;
        }
        entries.push_back({std::move(*word), *count});
    }
    if (in.bad())
        throw Error("read failure in " + (source_label.empty() ? std::string("input") : source_label));

    const std::size_t accepted = entries.size();
    WordFrequencyList list(std::move(entries), std::move(source_label));
    if (list.empty())
        throw EmptySupportError("empty corpus");
    stats.merged = accepted - list.size();
    list.set_stats(stats);
    return list;
}

WordFrequencyList load_frequency_list(const std::filesystem::path& path, const ListFormat& format)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open frequency list: " + path.string());
    return parse_frequency_list(in, format, path.stem().string());
}

WordFrequencyList filter_list(const WordFrequencyList& list, double min_count, LengthPredicate length_pred)
{
    if (!(min_count >= 0))
        throw DomainError("min_count must be >= 0");
    std::vector<WordEntry> kept;
    for (const auto& e : list.entries())
        if (e.count > min_count && length_pred(e.word.size()))
            kept.push_back(e);
    if (kept.empty())
        throw EmptySupportError("empty corpus after filtering");
    WordFrequencyList out(std::move(kept), list.source_label());
    out.set_stats(list.stats());
    return out;
}

void write_frequency_list(std::ostream& out, const WordFrequencyList& list, char separator)
{
    char buf[64];
    for (const auto& e : list.entries()) {
        const auto res = std::to_chars(buf, buf + sizeof buf, e.count);
        out << e.word << separator << std::string_view(buf, res.ptr - buf) << '\n';
    }
}

}  // namespace dictpin
