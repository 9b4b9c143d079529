#pragma once

#include <array>
#include <bitset>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

namespace dictpin {

// Total letter -> digit table over a-z. Partial tables never get built.
class KeypadMapping {
public:
    // Throws ConfigError unless every letter a-z maps to a digit '0'..'9'.
    KeypadMapping(std::string name, const std::map<char, char>& table);

    const std::string& name() const noexcept { return name_; }
    char digit_for(char letter) const noexcept { return table_[static_cast<unsigned char>(letter - 'a')]; }
    // Digits reachable from some letter; bit d set for digit d.
    const std::bitset<10>& digit_range() const noexcept { return range_; }

private:
    std::string name_;
    std::array<char, 26> table_{};
    std::bitset<10> range_;
};

// abc=2 def=3 ghi=4 jkl=5 mno=6 pqrs=7 tuv=8 wxyz=9
KeypadMapping standard_mapping();

// ab=1 cd=2 ef=3 ghi=4 jkl=5 mn=6 opq=7 rst=8 uvw=9 xyz=0
KeypadMapping stretched_mapping();

// "letter=digit" lines; blank lines and '#' comments are ignored.
KeypadMapping parse_mapping(std::istream& in, std::string name);
KeypadMapping load_mapping_file(const std::filesystem::path& path);

// "standard", "stretched", or a path to a mapping file.
KeypadMapping resolve_mapping(const std::string& spec);

// Word must already be normalized (a-z only).
std::string map_word(std::string_view word, const KeypadMapping& mapping);

}  // namespace dictpin
