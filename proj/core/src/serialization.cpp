#include "qcorr/serialization.hpp"

#include <json.hpp>

namespace qcorr {

std::string to_json_string(const XState& state) {
    nlohmann::json j;
    j["rho11"] = state.rho11();
    j["rho22"] = state.rho22();
    j["rho33"] = state.rho33();
    j["rho44"] = state.rho44();
    j["rho14_re"] = state.rho14().real();
    j["rho14_im"] = state.rho14().imag();
    j["rho23_re"] = state.rho23().real();
    j["rho23_im"] = state.rho23().imag();
    return j.dump();
}

XState xstate_from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigInvalid(std::string("xstate_from_json_string: ") + e.what());
    }

    const auto num = [&j](const char* key) -> double {
        if (!j.contains(key) || !j[key].is_number())
            throw ConfigInvalid(std::string("xstate_from_json_string: missing numeric key ") + key);
        return j[key].get<double>();
    };

    return XState(num("rho11"), num("rho22"), num("rho33"), num("rho44"),
                  cplx(num("rho14_re"), num("rho14_im")),
                  cplx(num("rho23_re"), num("rho23_im")));
}

} // namespace qcorr
