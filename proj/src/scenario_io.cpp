// Copyright 2026 The properclock developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "properclock/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace properclock {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed, const char* where) {
    if (!obj.is_object()) throw ScenarioLoadError(std::string(where) + ": expected an object");
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key))
            throw ScenarioLoadError(std::string(where) + ": unknown key '" + key + "'");
}

double get_number(const json& obj, const char* key, const char* where) {
    if (!obj.contains(key))
        throw ScenarioLoadError(std::string(where) + ": missing key '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ScenarioLoadError(std::string(where) + ": '" + key + "' must be a number");
    return v.get<double>();
}

// pbar may be a scalar (x component) or a 3-array
Eigen::Vector3d get_momentum(const json& obj, const char* key, const char* where) {
    if (!obj.contains(key))
        throw ScenarioLoadError(std::string(where) + ": missing key '" + key + "'");
    const json& v = obj.at(key);
    if (v.is_number()) return {v.get<double>(), 0.0, 0.0};
    if (v.is_array() && v.size() == 3 && v[0].is_number() && v[1].is_number() && v[2].is_number())
        return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
    throw ScenarioLoadError(std::string(where) + ": '" + key +
                            "' must be a number or a 3-element array");
}

}  // namespace

double momentum_si_to_natural(double p_si, double mass_kg) {
    return p_si / (mass_kg * constants::c);
}

double momentum_natural_to_si(double p_nat, double mass_kg) {
    return p_nat * mass_kg * constants::c;
}

double sigma_seconds_to_natural(double sigma_s, double mass_kg) {
    return sigma_s * mass_kg * constants::c * constants::c / constants::hbar;
}

double sigma_natural_to_seconds(double sigma_nat, double mass_kg) {
    return sigma_nat * constants::hbar / (mass_kg * constants::c * constants::c);
}

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ScenarioLoadError(std::string("scenario: invalid JSON: ") + e.what());
    }
    check_keys(doc, {"units", "mass_kg", "sigma", "clock_a", "clock_b"}, "scenario");

    if (!doc.contains("units") || !doc.at("units").is_string())
        throw ScenarioLoadError("scenario: 'units' must be \"natural\" or \"si\"");
    const std::string units = doc.at("units").get<std::string>();
    const bool si = units == "si";
    if (!si && units != "natural")
        throw ScenarioLoadError("scenario: 'units' must be \"natural\" or \"si\"");

    double mass_kg = 0.0;
    if (si) {
        mass_kg = get_number(doc, "mass_kg", "scenario");
        if (!(mass_kg > 0.0)) throw ScenarioLoadError("scenario: mass_kg must be positive");
    } else if (doc.contains("mass_kg")) {
        throw ScenarioLoadError("scenario: mass_kg is only valid with si units");
    }

    auto to_nat_p = [&](const Eigen::Vector3d& p) -> Eigen::Vector3d {
        return si ? Eigen::Vector3d(momentum_si_to_natural(p.x(), mass_kg),
                                    momentum_si_to_natural(p.y(), mass_kg),
                                    momentum_si_to_natural(p.z(), mass_kg))
                  : p;
    };
    auto to_nat_scalar = [&](double p) {
        return si ? momentum_si_to_natural(p, mass_kg) : p;
    };

    double sigma = get_number(doc, "sigma", "scenario");
    if (si) sigma = sigma_seconds_to_natural(sigma, mass_kg);
    if (!(sigma > 0.0)) throw ScenarioLoadError("scenario: sigma must be positive");

    if (!doc.contains("clock_b")) throw ScenarioLoadError("scenario: missing key 'clock_b'");
    const json& jb = doc.at("clock_b");
    check_keys(jb, {"pbar", "delta"}, "clock_b");

    if (!doc.contains("clock_a")) throw ScenarioLoadError("scenario: missing key 'clock_a'");
    const json& ja = doc.at("clock_a");
    const bool superposed = ja.is_object() && ja.contains("pbar_prime");
    if (superposed)
        check_keys(ja, {"pbar", "pbar_prime", "delta", "theta", "phi"}, "clock_a");
    else
        check_keys(ja, {"pbar", "delta"}, "clock_a");

    try {
        GaussianPacket cm_b(to_nat_p(get_momentum(jb, "pbar", "clock_b")),
                            to_nat_scalar(get_number(jb, "delta", "clock_b")));
        CenterOfMass cm_a = cm_b;
        if (superposed) {
            const double delta = to_nat_scalar(get_number(ja, "delta", "clock_a"));
            GaussianPacket first(to_nat_p(get_momentum(ja, "pbar", "clock_a")), delta);
            GaussianPacket second(to_nat_p(get_momentum(ja, "pbar_prime", "clock_a")), delta);
            cm_a = MomentumSuperposition(first, second, get_number(ja, "theta", "clock_a"),
                                         get_number(ja, "phi", "clock_a"));
        } else {
            cm_a = GaussianPacket(to_nat_p(get_momentum(ja, "pbar", "clock_a")),
                                  to_nat_scalar(get_number(ja, "delta", "clock_a")));
        }
        return Scenario(1.0, cm_a, cm_b, ClockFiducial(sigma), ClockFiducial(sigma),
                        UnitSystem::natural);
    } catch (const std::invalid_argument& e) {
        throw ScenarioLoadError(std::string("scenario: ") + e.what());
    }
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioLoadError("scenario: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace properclock
