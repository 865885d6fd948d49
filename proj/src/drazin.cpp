#include "osdrazin/drazin.hpp"

namespace osdrazin {

std::string to_string(Side side)
{
    switch (side) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two-sided";
    }
    return "?";
}

std::string to_string(WitnessKind kind)
{
    switch (kind) {
    case WitnessKind::regular: return "regular";
    case WitnessKind::pi_regular: return "pi-regular";
    case WitnessKind::strongly_pi_regular: return "strongly-pi-regular";
    case WitnessKind::drazin: return "drazin";
    case WitnessKind::group: return "group";
    case WitnessKind::generalized_drazin: return "generalized-drazin";
    }
    return "?";
}

Side parse_side(const std::string& text)
{
    if (text == "left") return Side::left;
    if (text == "right") return Side::right;
    if (text == "two-sided") return Side::two_sided;
    throw ParseError("unknown side '" + text + "'");
}

WitnessKind parse_witness_kind(const std::string& text)
{
    for (auto k : {WitnessKind::regular, WitnessKind::pi_regular, WitnessKind::strongly_pi_regular,
                   WitnessKind::drazin, WitnessKind::group, WitnessKind::generalized_drazin})
        if (to_string(k) == text) return k;
    throw ParseError("unknown witness kind '" + text + "'");
}

} // namespace osdrazin
