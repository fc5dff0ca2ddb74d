#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rnagen {

enum class Errc {
    illegal_character,
    unbalanced_brackets,
    empty_hairpin,
    variant_syntax,
    malformed_variant,
    rank_out_of_range,
    empty_set,
    table_too_small,
    cap_exceeded,
    bad_argument,
};

const char* errc_name(Errc code);

/// Error thrown for invalid inputs; carries a code and, for parse
/// errors, the byte offset of the offending character.
class Error : public std::runtime_error {
public:
    static constexpr std::size_t no_position = static_cast<std::size_t>(-1);

    Error(Errc code, const std::string& message, std::size_t position = no_position)
        : std::runtime_error(message), code_(code), position_(position) {}

    Errc code() const noexcept { return code_; }
    std::size_t position() const noexcept { return position_; }

private:
    Errc code_;
    std::size_t position_;
};

} // namespace rnagen
