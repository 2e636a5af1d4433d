#include <gordon/wire.hpp>

namespace gordon::wire
{

namespace
{

template <typename T>
T field(const json &j, const char *name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw precondition_error(std::string("missing field '") + name + "'");
    }
    try {
        return j.at(name).get<T>();
    } catch (const json::exception &e) {
        throw precondition_error(std::string("bad field '") + name + "': " + e.what());
    }
}

} // namespace

json rational_to_json(const Rational &r)
{
    return to_string(r);
}

Rational rational_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    if (!j.is_string()) {
        throw precondition_error("rational must be a string or integer");
    }
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        const std::int64_t num = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash)) {
            throw precondition_error("bad rational '" + s + "'");
        }
        if (slash == std::string::npos) {
            return Rational(num);
        }
        const std::string tail = s.substr(slash + 1);
        const std::int64_t den = std::stoll(tail, &used);
        if (used != tail.size() || den == 0) {
            throw precondition_error("bad rational '" + s + "'");
        }
        return Rational(num, den);
    } catch (const std::logic_error &) {
        throw precondition_error("bad rational '" + s + "'");
    }
}

json to_json(const Series &s)
{
    json coeffs = json::array();
    for (std::int64_t i = 0; i < s.slots(); ++i) {
        const auto &c = s.coeff_scaled(i);
        if (sgn(c) != 0) {
            coeffs.push_back(json::array({i, c.get_str()}));
        }
    }
    return {{"denom", s.denom()},
            {"order_num", s.order().numerator()},
            {"order_den", s.order().denominator()},
            {"coeffs", coeffs}};
}

Series series_from_json(const json &j)
{
    const int denom = field<int>(j, "denom");
    const auto num = field<std::int64_t>(j, "order_num");
    const auto den = field<std::int64_t>(j, "order_den");
    if (den <= 0) {
        throw precondition_error("order denominator must be positive");
    }
    Series s(denom, Rational(num, den));
    const json &coeffs = j.at("coeffs");
    if (!coeffs.is_array()) {
        throw precondition_error("coeffs must be an array");
    }
    for (const auto &entry : coeffs) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_string()) {
            throw precondition_error("coefficient entries must be [slot, \"decimal\"]");
        }
        const auto slot = entry[0].get<std::int64_t>();
        if (slot < 0 || slot >= s.slots()) {
            throw precondition_error("coefficient slot out of range");
        }
        Integer c;
        if (c.set_str(entry[1].get<std::string>(), 10) != 0) {
            throw precondition_error("bad integer '" + entry[1].get<std::string>() + "'");
        }
        s.mutable_coeffs()[static_cast<std::size_t>(slot)] = c;
    }
    return s;
}

json to_json(const Discrepancy &d)
{
    return {{"exponent", rational_to_json(d.exponent)}, {"lhs", d.lhs.get_str()}, {"rhs", d.rhs.get_str()}};
}

Discrepancy discrepancy_from_json(const json &j)
{
    return {rational_from_json(j.at("exponent")), Integer(field<std::string>(j, "lhs")),
            Integer(field<std::string>(j, "rhs"))};
}

json to_json(const paths::LatticePath &p)
{
    json pk = json::array();
    for (const auto &peak : paths::peaks(p)) {
        pk.push_back({{"weight", peak.weight}, {"height", peak.height}, {"relative_height", peak.relative_height}});
    }
    return {{"start_height", p.start_height()},
            {"steps", p.step_string()},
            {"peaks", pk},
            {"major_index", paths::major_index(p)}};
}

paths::LatticePath path_from_json(const json &j)
{
    return paths::LatticePath::from_string(field<int>(j, "start_height"), field<std::string>(j, "steps"));
}

json to_json(const paths::ConstructionData &cd)
{
    return {{"k", cd.gp.k},
            {"a", cd.gp.a},
            {"n", cd.n},
            {"east_partition", cd.east_partition},
            {"uplift_ranks", cd.uplift_ranks},
            {"right_moves", cd.right_moves},
            {"weight", cd.weight()}};
}

paths::ConstructionData construction_from_json(const json &j)
{
    paths::ConstructionData cd;
    cd.gp = {field<int>(j, "k"), field<int>(j, "a")};
    cd.n = field<std::vector<int>>(j, "n");
    cd.east_partition = field<std::vector<int>>(j, "east_partition");
    cd.uplift_ranks = field<std::vector<int>>(j, "uplift_ranks");
    cd.right_moves = field<std::vector<std::vector<int>>>(j, "right_moves");
    cd.validate();
    return cd;
}

json to_json(const bailey::BaileyPair &bp)
{
    json alpha = json::array();
    json beta = json::array();
    for (const auto &s : bp.alpha) {
        alpha.push_back(to_json(s));
    }
    for (const auto &s : bp.beta) {
        beta.push_back(to_json(s));
    }
    return {{"a_exponent", rational_to_json(bp.a_exponent)},
            {"base", rational_to_json(bp.base)},
            {"order", rational_to_json(bp.order)},
            {"n_max", bp.n_max()},
            {"alpha", alpha},
            {"beta", beta}};
}

bailey::BaileyPair pair_from_json(const json &j)
{
    bailey::BaileyPair bp;
    bp.a_exponent = rational_from_json(j.at("a_exponent"));
    bp.base = rational_from_json(j.at("base"));
    bp.order = rational_from_json(j.at("order"));
    for (const auto &s : j.at("alpha")) {
        bp.alpha.push_back(series_from_json(s));
    }
    for (const auto &s : j.at("beta")) {
        bp.beta.push_back(series_from_json(s));
    }
    if (bp.alpha.size() != bp.beta.size()) {
        throw precondition_error("alpha and beta tables differ in length");
    }
    return bp;
}

json to_json(const identities::IdentitySpec &spec)
{
    return {{"theorem", identities::to_string(spec.theorem)}, {"k", spec.gp.k}, {"a", spec.gp.a}, {"order", spec.order}};
}

identities::IdentitySpec spec_from_json(const json &j)
{
    return {identities::theorem_from_string(field<std::string>(j, "theorem")),
            {field<int>(j, "k"), field<int>(j, "a")},
            field<int>(j, "order")};
}

json to_json(const identities::VerificationReport &r)
{
    json out = {{"spec", to_json(r.spec)}, {"equal", r.equal}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
    out["first_discrepancy"] = r.first_discrepancy ? to_json(*r.first_discrepancy) : json(nullptr);
    return out;
}

identities::VerificationReport report_from_json(const json &j)
{
    identities::VerificationReport r;
    r.spec = spec_from_json(j.at("spec"));
    r.equal = field<bool>(j, "equal");
    r.lhs = series_from_json(j.at("lhs"));
    r.rhs = series_from_json(j.at("rhs"));
    if (j.contains("first_discrepancy") && !j.at("first_discrepancy").is_null()) {
        r.first_discrepancy = discrepancy_from_json(j.at("first_discrepancy"));
    }
    if (r.equal == r.first_discrepancy.has_value()) {
        throw precondition_error("report is equal exactly when it has no discrepancy");
    }
    return r;
}

} // namespace gordon::wire
