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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sparckey/csv.hpp"
#include "sparckey/run_config.hpp"

using namespace sparckey;

namespace {

std::string write_temp_config(const std::string& body) {
    static int counter = 0;
    const std::string path =
        "/tmp/sparckey-test-config-" + std::to_string(counter++) + ".json";
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("minimal config file applies defaults and records provenance") {
    const std::string path =
        write_temp_config(R"({"model": {"sigma_x2": 1.0, "sigma_b2": 0.1, "sigma_e2": 0.2}})");
    const RunConfig cfg = load_config(path);
    cfg.validate();
    CHECK(cfg.model.sigma_b2 == 0.1);
    CHECK(cfg.q == 1.0);                 // default
    CHECK(cfg.margins.delta1 == 0.05);   // default
    CHECK(cfg.trials == 200);            // default
    CHECK(cfg.provenance.at("model") == "file");
    CHECK(cfg.provenance.at("wz") == "default");
    const std::string echo = cfg.echo_json();
    CHECK(echo.find("\"provenance\"") != std::string::npos);
    CHECK(echo.find("\"sigma_b2\":0.1") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("unknown keys are rejected by name") {
    const std::string path = write_temp_config(R"({"model": {"sigma_x_sq": 1.0}})");
    CHECK_THROWS_WITH_AS(load_config(path), doctest::Contains("sigma_x_sq"), ConfigError);
    std::remove(path.c_str());

    const std::string path2 = write_temp_config(R"({"modell": {}})");
    CHECK_THROWS_WITH_AS(load_config(path2), doctest::Contains("modell"), ConfigError);
    std::remove(path2.c_str());

    CHECK_THROWS_AS(load_config("/does/not/exist.json"), ConfigError);
    CHECK_THROWS_AS(parse_config_json("not json", "file"), ConfigError);
}

TEST_CASE("config hash ignores threads and output location") {
    RunConfig a = parse_config_json(R"({"wz": {"q": 0.5}})", "file");
    RunConfig b = a;
    b.threads = 8;
    b.output_dir = "/elsewhere";
    CHECK(a.config_hash() == b.config_hash());
    RunConfig c = a;
    c.q = 0.6;
    CHECK(a.config_hash() != c.config_hash());
    CHECK(a.config_hash().size() == 16);
}

TEST_CASE("resolved code params derive the dictionary seed and amp power") {
    RunConfig cfg = parse_config_json(R"({"sim": {"master_seed": 99}})", "file");
    const CodeParams params = cfg.resolved_code_params();
    CHECK(params.dict_seed == derive_seed(99, SeedStream::dictionary));
    CHECK(params.amp_power ==
          doctest::Approx(default_amp_power(cfg.model.sigma_x2, cfg.q, params)));

    RunConfig pinned = parse_config_json(
        R"({"code": {"dict_seed": 123, "amp_power": 2.5}})", "file");
    const CodeParams explicit_params = pinned.resolved_code_params();
    CHECK(explicit_params.dict_seed == 123);
    CHECK(explicit_params.amp_power == 2.5);
}

TEST_CASE("region CSV schema is stable (golden header + zero column)") {
    SourceModel same{1.0, 0.2, 0.2};
    SweepConfig sweep;
    sweep.q_min = 0.5;
    sweep.q_max = 2.0;
    sweep.n_points = 3;
    sweep.alpha_fixed = 12.0;
    const auto rows = sweep_region(same, sweep);
    std::ostringstream os;
    write_region_csv(os, "{\"x\":1}", rows);
    std::istringstream lines(os.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "# sparckey region v1");
    std::getline(lines, line);
    CHECK(line == "# config: {\"x\":1}");
    std::getline(lines, line);
    CHECK(line ==
          "q,d_x,r_star,gamma_bob,gamma_eve,c_bob,c_eve,r_k,r_p,rate_gap,alpha_req,feasible,error");
    int data_rows = 0;
    while (std::getline(lines, line)) {
        ++data_rows;
        // r_k column (8th field) must be exactly zero for matched channels
        std::istringstream fields(line);
        std::string field;
        for (int i = 0; i < 8; ++i) std::getline(fields, field, ',');
        CHECK(field == "0");
    }
    CHECK(data_rows == 3);
}

TEST_CASE("simulate CSV carries the documented column order") {
    std::ostringstream os;
    CodeParams params;
    params.n = 16;
    params.l_sections = 2;
    params.m_per_section = 4;
    params.m_inner = 2;
    params.amp_power = 1.0;
    params.dict_seed = 1;
    TrialStats stats;
    stats.trials = 5;
    stats.distortion_mean = 0.25;
    write_simulate_csv(os, "{}", {{1.5, params}}, {stats});
    std::istringstream lines(os.str());
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    std::getline(lines, line);
    CHECK(line ==
          "q,n,L,M,M_inner,trials,distortion_mean,wz_error_rate,key_disagree_rate,"
          "uniformity,leakage,wall_time");
    std::getline(lines, line);
    CHECK(line == "1.5,16,2,4,2,5,0.25,0,0,0,0,0");
}

TEST_CASE("csv_double formatting is locale-free and deterministic") {
    CHECK(csv_double(0.5) == "0.5");
    CHECK(csv_double(1e-9) == "1e-09");
    CHECK(csv_double(0.30306790178515777) == "0.303067902");
}
