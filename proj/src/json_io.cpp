#include "hilbmatch/json_io.hpp"

#include <stdexcept>

namespace hilbmatch {

using nlohmann::json;

json coefficients_json(const RatPoly& p) {
    json arr = json::array();
    for (const Rational& c : p.coefficients())
        arr.push_back({{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return arr;
}

RatPoly ratpoly_from_coefficients_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("coefficient list must be an array");
    std::vector<Rational> v;
    v.reserve(j.size());
    for (const auto& item : j) {
        const BigInt num(item.at("num").get<std::string>(), 10);
        const BigInt den(item.at("den").get<std::string>(), 10);
        v.push_back(make_rational(num, den));
    }
    return RatPoly(std::move(v));
}

json descriptor_json(const FamilyDescriptor& d) {
    json out;
    out["family"] = std::string(family_name(d.family));
    json params = json::object();
    for (const auto& [name, value] : d.params) params[name] = value;
    out["params"] = params;
    out["assumptions"] = d.assumptions;
    if (d.family == Family::Product) {
        json children = json::array();
        for (const auto& ch : d.children) children.push_back(descriptor_json(ch));
        out["children"] = children;
    }
    return out;
}

FamilyDescriptor descriptor_from_json(const json& j) {
    FamilyDescriptor d;
    const auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("unknown family in descriptor json");
    d.family = *fam;
    // Parameter order is canonical per family, not json object order.
    for (std::string_view pname : family_param_names(d.family))
        d.params.emplace_back(std::string(pname),
                              j.at("params").at(std::string(pname)).get<long long>());
    if (j.contains("assumptions"))
        d.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    if (d.family == Family::Product)
        for (const auto& ch : j.at("children")) d.children.push_back(descriptor_from_json(ch));
    return d;
}

json match_json(const MatchRecord& m) {
    return {{"left", descriptor_json(m.left)},
            {"right", descriptor_json(m.right)},
            {"polynomial", m.polynomial.key()},
            {"interpretation", m.interpretation}};
}

json solution_json(const CY4Solution& s) {
    return {{"p", s.p}, {"r", s.r}, {"x", s.x}, {"y", s.y}, {"z", s.z}};
}

json check_json(const CheckResult& c) {
    return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

}  // namespace hilbmatch
