#include "dictpin/mapping.hpp"

#include "dictpin/error.hpp"

#include <fstream>
#include <istream>

namespace dictpin {

namespace {

std::map<char, char> table_from_groups(std::initializer_list<std::pair<const char*, char>> groups)
{
    std::map<char, char> table;
    for (const auto& [letters, digit] : groups)
        for (const char* p = letters; *p; ++p)
            table[*p] = digit;
    return table;
}

}  // namespace

KeypadMapping::KeypadMapping(std::string name, const std::map<char, char>& table) : name_(std::move(name))
{
    table_.fill('\0');
    for (const auto& [letter, digit] : table) {
        if (letter < 'a' || letter > 'z')
            throw ConfigError("mapping '" + name_ + "': not a lowercase letter: '" + std::string(1, letter) + "'");
        if (digit < '0' || digit > '9')
            throw ConfigError("mapping '" + name_ + "': letter '" + std::string(1, letter) + "' maps to non-digit");
        table_[static_cast<unsigned char>(letter - 'a')] = digit;
    }
    for (int i = 0; i < 26; ++i) {
        if (table_[i] == '\0')
            throw ConfigError("mapping '" + name_ + "' is partial: no digit for '" +
                              std::string(1, static_cast<char>('a' + i)) + "'");
        range_.set(static_cast<std::size_t>(table_[i] - '0'));
    }
}

KeypadMapping standard_mapping()
{
    return KeypadMapping("standard", table_from_groups({{"abc", '2'},
                                                        {"def", '3'},
                                                        {"ghi", '4'},
                                                        {"jkl", '5'},
                                                        {"mno", '6'},
                                                        {"pqrs", '7'},
                                                        {"tuv", '8'},
                                                        {"wxyz", '9'}}));
}

KeypadMapping stretched_mapping()
{
    return KeypadMapping("stretched", table_from_groups({{"ab", '1'},
                                                         {"cd", '2'},
                                                         {"ef", '3'},
                                                         {"ghi", '4'},
                                                         {"jkl", '5'},
                                                         {"mn", '6'},
                                                         {"opq", '7'},
                                                         {"rst", '8'},
                                                         {"uvw", '9'},
                                                         {"xyz", '0'}}));
}

KeypadMapping parse_mapping(std::istream& in, std::string name)
{
    std::map<char, char> table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string compact;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r')
                compact.push_back(c);
        if (compact.empty())
            continue;
        if (compact.size() != 3 || compact[1] != '=')
            throw ParseError("expected 'letter=digit'", lineno);
        char letter = compact[0];
        if (letter >= 'A' && letter <= 'Z')
            letter = static_cast<char>(letter - 'A' + 'a');
        if (letter < 'a' || letter > 'z' || compact[2] < '0' || compact[2] > '9')
            throw ParseError("expected 'letter=digit'", lineno);
        if (!table.emplace(letter, compact[2]).second)
            throw ParseError("letter '" + std::string(1, letter) + "' assigned twice", lineno);
    }
    return KeypadMapping(std::move(name), table);
}

KeypadMapping load_mapping_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open mapping file: " + path.string());
    return parse_mapping(in, path.stem().string());
}

KeypadMapping resolve_mapping(const std::string& spec)
{
    if (spec == "standard")
        return standard_mapping();
    if (spec == "stretched")
        return stretched_mapping();
    return load_mapping_file(spec);
}

std::string map_word(std::string_view word, const KeypadMapping& mapping)
{
    std::string pin(word.size(), '\0');
    for (std::size_t i = 0; i < word.size(); ++i)
        pin[i] = mapping.digit_for(word[i]);
    return pin;
}

}  // namespace dictpin
