#include "hilbmatch/rangespec.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace hilbmatch {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

long long parse_int(std::string_view tok, std::string_view where) {
    tok = trim(tok);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad integer '" + std::string(tok) + "' in " +
                                    std::string(where));
    return v;
}

ParamBound parse_bound(std::string_view piece, std::string_view family) {
    const std::size_t eq = piece.find('=');
    if (eq == std::string_view::npos)
        throw std::invalid_argument("expected name=lo..hi in '" + std::string(piece) + "'");
    std::string name(trim(piece.substr(0, eq)));
    std::string_view value = piece.substr(eq + 1);
    const std::size_t dots = value.find("..");
    ParamBound b;
    b.name = name;
    if (dots == std::string_view::npos) {
        b.lo = b.hi = parse_int(value, family);
    } else {
        b.lo = parse_int(value.substr(0, dots), family);
        b.hi = parse_int(value.substr(dots + 2), family);
    }
    if (b.lo > b.hi)
        throw std::invalid_argument("empty range " + b.name + "=" + std::to_string(b.lo) + ".." +
                                    std::to_string(b.hi));
    return b;
}

ParamRange parse_simple(std::string_view text) {
    text = trim(text);
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("expected family:params in '" + std::string(text) + "'");
    const std::string_view fname = trim(text.substr(0, colon));
    const auto fam = family_from_name(fname);
    if (!fam) throw std::invalid_argument("unknown family '" + std::string(fname) + "'");
    if (*fam == Family::Product)
        throw std::invalid_argument("product factors must be plain families");

    std::vector<ParamBound> given;
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        const std::size_t comma = rest.find(',');
        given.push_back(parse_bound(trim(rest.substr(0, comma)), fname));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }

    // Accept parameters in any order but store them canonically.
    ParamRange range;
    range.family = *fam;
    for (std::string_view pname : family_param_names(*fam)) {
        auto it = std::find_if(given.begin(), given.end(),
                               [&](const ParamBound& b) { return b.name == pname; });
        if (it == given.end())
            throw std::invalid_argument(std::string(fname) + " is missing parameter '" +
                                        std::string(pname) + "'");
        range.bounds.push_back(*it);
        given.erase(it);
    }
    if (!given.empty())
        throw std::invalid_argument(std::string(fname) + " does not take parameter '" +
                                    given.front().name + "'");
    return range;
}

}  // namespace

SideSpec parse_side_spec(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty match side");

    SideSpec side;
    if (text.starts_with("product[")) {
        if (!text.ends_with(']'))
            throw std::invalid_argument("product[...] is missing its closing bracket");
        side.is_product = true;
        std::string_view inner = text.substr(8, text.size() - 9);
        if (trim(inner).empty()) throw EmptyProduct("product[] has no factors");

        // Commas separate both factors and parameters; a piece containing ':'
        // starts a new factor.
        std::string current;
        auto flush = [&] {
            if (!current.empty()) side.factors.push_back(parse_simple(current));
            current.clear();
        };
        std::string_view rest = inner;
        while (true) {
            const std::size_t comma = rest.find(',');
            const std::string_view piece = trim(rest.substr(0, comma));
            if (piece.find(':') != std::string_view::npos) {
                flush();
                current = std::string(piece);
            } else {
                if (current.empty())
                    throw std::invalid_argument("parameter '" + std::string(piece) +
                                                "' appears before any family");
                current += ',';
                current += piece;
            }
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        flush();
    } else {
        side.factors.push_back(parse_simple(text));
    }
    return side;
}

std::vector<PolarizedFamily> enumerate_side(const SideSpec& side) {
    return enumerate_product_side(side.factors);
}

std::vector<MatchRecord> match_sides(const SideSpec& left, const SideSpec& right) {
    return match_enumerated(enumerate_side(left), enumerate_side(right));
}

}  // namespace hilbmatch
