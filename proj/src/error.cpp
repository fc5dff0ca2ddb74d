#include "rnagen/error.hpp"

namespace rnagen {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::illegal_character: return "IllegalCharacter";
    case Errc::unbalanced_brackets: return "UnbalancedBrackets";
    case Errc::empty_hairpin: return "EmptyHairpin";
    case Errc::variant_syntax: return "SyntaxError";
    case Errc::malformed_variant: return "MalformedVariant";
    case Errc::rank_out_of_range: return "RankOutOfRange";
    case Errc::empty_set: return "EmptySet";
    case Errc::table_too_small: return "TableTooSmall";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::bad_argument: return "BadArgument";
    }
    return "UnknownError";
}

} // namespace rnagen
