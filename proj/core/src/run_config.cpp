// Copyright 2026 The sparckey Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sparckey/run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sparckey {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::set<std::string>& known,
                         const std::string& scope) {
    for (const auto& [key, value] : object.items()) {
        if (!known.contains(key))
            throw ConfigError("config: unknown key \"" + (scope.empty() ? key : scope + "." + key) +
                              "\"");
    }
}

template <typename T>
void assign_if(const json& object, const char* key, T& target) {
    if (object.contains(key)) target = object.at(key).get<T>();
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

}  // namespace

CodeParams RunConfig::resolved_code_params() const {
    CodeParams params;
    params.n = code_n;
    params.l_sections = code_l;
    params.m_per_section = code_m;
    params.m_inner = code_m_inner;
    params.dict_seed =
        dict_seed != 0 ? dict_seed : derive_seed(master_seed, SeedStream::dictionary);
    params.amp_power = 1.0;  // placeholder so validate() passes before resolving
    params.validate();
    params.amp_power =
        amp_power > 0.0 ? amp_power : default_amp_power(model.sigma_x2, q, params);
    return params;
}

DecodeMode RunConfig::decode_mode() const {
    if (decoder == "auto") return DecodeMode::automatic;
    if (decoder == "exhaustive") return DecodeMode::exhaustive;
    if (decoder == "greedy") return DecodeMode::greedy;
    throw ConfigError("config: sim.decoder must be auto, exhaustive or greedy");
}

EveView RunConfig::eve_view_mode() const {
    if (eve_view == "decoded") return EveView::decoded;
    if (eve_view == "statistic") return EveView::statistic;
    throw ConfigError("config: sim.eve_view must be decoded or statistic");
}

void RunConfig::validate() const {
    model.validate();
    margins.validate();
    sweep.validate();
    if (!(q > 0.0)) throw ConfigError("config: wz.q must be > 0");
    if (!(nu >= 0.0)) throw ConfigError("config: hash.nu must be >= 0");
    if (trials < 1) throw ConfigError("config: sim.trials must be >= 1");
    if (threads < 1) throw ConfigError("config: sim.threads must be >= 1");
    if (output_format != "csv") throw ConfigError("config: output.format must be csv");
    decode_mode();
    eve_view_mode();
    resolved_code_params();
}

std::string RunConfig::echo_json() const {
    json j;
    j["model"] = {{"sigma_x2", model.sigma_x2},
                  {"sigma_b2", model.sigma_b2},
                  {"sigma_e2", model.sigma_e2}};
    const CodeParams params = resolved_code_params();
    j["code"] = {{"n", code_n},
                 {"l_sections", code_l},
                 {"m_per_section", code_m},
                 {"m_inner", code_m_inner},
                 {"amp_power", params.amp_power},
                 {"dict_seed", params.dict_seed}};
    j["wz"] = {{"q", q}, {"delta1", margins.delta1}, {"delta2", margins.delta2}};
    j["hash"] = {{"nu", nu}, {"out_bits", out_bits}};
    j["sweep"] = {{"q_min", sweep.q_min},
                  {"q_max", sweep.q_max},
                  {"n_points", sweep.n_points},
                  {"log_spaced", sweep.log_spaced},
                  {"alpha_fixed", sweep.alpha_fixed}};
    j["sim"] = {{"trials", trials},
                {"master_seed", master_seed},
                {"threads", threads},
                {"decoder", decoder},
                {"eve_view", eve_view}};
    j["output"] = {{"dir", output_dir}, {"format", output_format}};
    json prov(provenance);
    if (prov.is_null()) prov = json::object();
    j["provenance"] = prov;
    return j.dump();
}

std::string RunConfig::config_hash() const {
    json j = json::parse(echo_json());
    j.erase("provenance");
    // threads and output location do not change results; keep them out of
    // the identity so reruns land on the same file name.
    j["sim"].erase("threads");
    j.erase("output");
    const std::uint64_t hash = fnv1a64(j.dump());
    std::ostringstream os;
    os << std::hex << std::nouppercase;
    os.width(16);
    os.fill('0');
    os << hash;
    return os.str();
}

RunConfig parse_config_json(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: JSON parse failure: " + std::string(e.what()));
    }
    if (!root.is_object()) throw ConfigError("config: top level must be an object");
    reject_unknown_keys(root, {"model", "code", "wz", "hash", "sweep", "sim", "output"}, "");

    RunConfig cfg;
    for (const char* group : {"model", "code", "wz", "hash", "sweep", "sim", "output"})
        cfg.provenance[group] = "default";

    if (root.contains("model")) {
        const json& m = root["model"];
        reject_unknown_keys(m, {"sigma_x2", "sigma_b2", "sigma_e2"}, "model");
        assign_if(m, "sigma_x2", cfg.model.sigma_x2);
        assign_if(m, "sigma_b2", cfg.model.sigma_b2);
        assign_if(m, "sigma_e2", cfg.model.sigma_e2);
        cfg.provenance["model"] = origin;
    }
    if (root.contains("code")) {
        const json& c = root["code"];
        reject_unknown_keys(
            c, {"n", "l_sections", "m_per_section", "m_inner", "amp_power", "dict_seed"}, "code");
        assign_if(c, "n", cfg.code_n);
        assign_if(c, "l_sections", cfg.code_l);
        assign_if(c, "m_per_section", cfg.code_m);
        assign_if(c, "m_inner", cfg.code_m_inner);
        assign_if(c, "amp_power", cfg.amp_power);
        assign_if(c, "dict_seed", cfg.dict_seed);
        cfg.provenance["code"] = origin;
    }
    if (root.contains("wz")) {
        const json& w = root["wz"];
        reject_unknown_keys(w, {"q", "delta1", "delta2"}, "wz");
        assign_if(w, "q", cfg.q);
        assign_if(w, "delta1", cfg.margins.delta1);
        assign_if(w, "delta2", cfg.margins.delta2);
        cfg.provenance["wz"] = origin;
    }
    if (root.contains("hash")) {
        const json& h = root["hash"];
        reject_unknown_keys(h, {"nu", "out_bits"}, "hash");
        assign_if(h, "nu", cfg.nu);
        assign_if(h, "out_bits", cfg.out_bits);
        cfg.provenance["hash"] = origin;
    }
    if (root.contains("sweep")) {
        const json& s = root["sweep"];
        reject_unknown_keys(s, {"q_min", "q_max", "n_points", "log_spaced", "alpha_fixed"},
                            "sweep");
        assign_if(s, "q_min", cfg.sweep.q_min);
        assign_if(s, "q_max", cfg.sweep.q_max);
        assign_if(s, "n_points", cfg.sweep.n_points);
        assign_if(s, "log_spaced", cfg.sweep.log_spaced);
        assign_if(s, "alpha_fixed", cfg.sweep.alpha_fixed);
        cfg.provenance["sweep"] = origin;
    }
    if (root.contains("sim")) {
        const json& s = root["sim"];
        reject_unknown_keys(s, {"trials", "master_seed", "threads", "decoder", "eve_view"}, "sim");
        assign_if(s, "trials", cfg.trials);
        assign_if(s, "master_seed", cfg.master_seed);
        assign_if(s, "threads", cfg.threads);
        assign_if(s, "decoder", cfg.decoder);
        assign_if(s, "eve_view", cfg.eve_view);
        cfg.provenance["sim"] = origin;
    }
    if (root.contains("output")) {
        const json& o = root["output"];
        reject_unknown_keys(o, {"dir", "format"}, "output");
        assign_if(o, "dir", cfg.output_dir);
        assign_if(o, "format", cfg.output_format);
        cfg.provenance["output"] = origin;
    }
    // The sweep margins mirror wz margins; keep them aligned.
    cfg.sweep.margins = cfg.margins;
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ConfigError("config: cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_config_json(buffer.str(), "file");
}

}  // namespace sparckey
