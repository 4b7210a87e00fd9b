#include "koon/json_io.hpp"

#include <json.hpp>

#include "koon/errors.hpp"

namespace koon {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw SchemaError(path + ": " + what);
}

double require_number(const json& obj, const std::string& path, const char* field) {
    if (!obj.contains(field)) fail(path, std::string("missing field '") + field + "'");
    const json& v = obj.at(field);
    if (!v.is_number()) fail(path + "/" + field, "expected a number");
    return v.get<double>();
}

long require_integer(const json& obj, const std::string& path, const char* field) {
    if (!obj.contains(field)) fail(path, std::string("missing field '") + field + "'");
    const json& v = obj.at(field);
    if (!v.is_number_integer()) fail(path + "/" + field, "expected an integer");
    return v.get<long>();
}

DiscreteLifetime distribution_from(const json& obj, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected a distribution object");
    if (!obj.contains("family")) fail(path, "missing field 'family'");
    const json& fam = obj.at("family");
    if (!fam.is_string()) fail(path + "/family", "expected a string");
    const std::string name = fam.get<std::string>();

    try {
        if (name == "geometric")
            return DiscreteLifetime::geometric(require_number(obj, path, "p"));
        if (name == "negbinomial")
            return DiscreteLifetime::neg_binomial(require_integer(obj, path, "r"),
                                                  require_number(obj, path, "p"));
        if (name == "dweibull")
            return DiscreteLifetime::discrete_weibull(require_number(obj, path, "q"),
                                                      require_number(obj, path, "beta"));
        if (name == "pmf") {
            if (!obj.contains("weights")) fail(path, "missing field 'weights'");
            const json& w = obj.at("weights");
            if (!w.is_array()) fail(path + "/weights", "expected an array");
            std::vector<double> weights;
            weights.reserve(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (!w[i].is_number())
                    fail(path + "/weights/" + std::to_string(i), "expected a number");
                weights.push_back(w[i].get<double>());
            }
            return DiscreteLifetime::finite_pmf(weights);
        }
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
    fail(path + "/family", "unknown family '" + name +
                               "' (geometric|negbinomial|dweibull|pmf)");
}

json distribution_to(const DiscreteLifetime& d) {
    switch (d.family()) {
        case Family::Geometric:
            return {{"family", "geometric"}, {"p", d.geom_p()}};
        case Family::NegBinomial:
            return {{"family", "negbinomial"}, {"r", d.nb_r()}, {"p", d.nb_p()}};
        case Family::DiscreteWeibull:
            return {{"family", "dweibull"}, {"q", d.dw_q()}, {"beta", d.dw_beta()}};
        case Family::FinitePmf:
            return {{"family", "pmf"}, {"weights", d.pmf_table()}};
        case Family::Residual:
            break;
    }
    throw SchemaError("residual-transformed distributions have no JSON encoding");
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(e.what());
    }
}

}  // namespace

DiscreteLifetime distribution_from_json_text(const std::string& text) {
    return distribution_from(parse_text(text), "");
}

SystemSpec system_from_json_text(const std::string& text) {
    const json root = parse_text(text);
    if (!root.is_object()) fail("", "expected a system object");

    SystemSpec sys;
    sys.n = require_integer(root, "", "n");
    sys.k = require_integer(root, "", "k");

    const bool has_active = root.contains("active");
    const bool has_iid = root.contains("iid");
    if (has_active == has_iid)
        fail("", "exactly one of 'active' or 'iid' is required");

    if (has_iid) {
        if (sys.n < 1) fail("/n", "must be >= 1");
        const DiscreteLifetime one = distribution_from(root.at("iid"), "/iid");
        sys.active.assign(sys.n, one);
    } else {
        const json& arr = root.at("active");
        if (!arr.is_array()) fail("/active", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i)
            sys.active.push_back(distribution_from(arr[i], "/active/" + std::to_string(i)));
        if (static_cast<long>(sys.active.size()) != sys.n)
            fail("/active", "length " + std::to_string(sys.active.size()) +
                                " does not match n=" + std::to_string(sys.n));
    }

    if (!root.contains("standby")) fail("", "missing field 'standby'");
    sys.standby = distribution_from(root.at("standby"), "/standby");

    try {
        sys.validate();
    } catch (const std::invalid_argument& e) {
        fail("", e.what());
    }
    return sys;
}

std::string distribution_to_json_text(const DiscreteLifetime& dist) {
    return distribution_to(dist).dump(2);
}

std::string system_to_json_text(const SystemSpec& sys) {
    sys.validate();
    json root;
    root["n"] = sys.n;
    root["k"] = sys.k;
    json arr = json::array();
    for (const auto& d : sys.active) arr.push_back(distribution_to(d));
    root["active"] = std::move(arr);
    root["standby"] = distribution_to(sys.standby);
    return root.dump(2);
}

}  // namespace koon
