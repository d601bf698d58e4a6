// SPDX-License-Identifier: Apache-2.0
//
// irss: IRS-aided electromagnetic stealth simulation and reflection design
// Copyright (C) 2026 irss contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irss/config.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace irss
{
    using nlohmann::json;

    namespace
    {
        [[noreturn]] void fail(const std::string &field, const std::string &what)
        {
            throw ConfigError(field, what);
        }

        void reject_unknown(const json &obj, const std::string &path, std::initializer_list<const char *> known)
        {
            const std::set<std::string> allowed(known.begin(), known.end());
            for (auto it = obj.begin(); it != obj.end(); ++it)
                if (!allowed.count(it.key()))
                    fail(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
        }

        const json &object_at(const json &parent, const char *key, const std::string &path)
        {
            const json &v = parent.at(key);
            if (!v.is_object())
                fail(path, "expected an object");
            return v;
        }

        std::string join(const std::string &path, const char *key)
        {
            return path.empty() ? std::string(key) : path + "." + key;
        }

        void read_number(const json &obj, const char *key, const std::string &path, double &out)
        {
            if (!obj.contains(key))
                return;
            const json &v = obj.at(key);
            if (!v.is_number())
                fail(join(path, key), "expected a number");
            out = v.get<double>();
        }

        template <typename T>
        void read_count(const json &obj, const char *key, const std::string &path, T &out)
        {
            if (!obj.contains(key))
                return;
            const json &v = obj.at(key);
            if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0))
                fail(join(path, key), "expected a nonnegative integer");
            out = v.get<T>();
        }

        void read_vec3(const json &obj, const char *key, const std::string &path, std::array<double, 3> &out)
        {
            if (!obj.contains(key))
                return;
            const json &v = obj.at(key);
            if (!v.is_array() || v.size() != 3)
                fail(join(path, key), "expected [x, y, z]");
            for (std::size_t i = 0; i < 3; ++i)
            {
                if (!v[i].is_number())
                    fail(join(path, key), "expected [x, y, z]");
                out[i] = v[i].get<double>();
            }
        }

        RadarConfig parse_radar(const json &j, const std::string &path)
        {
            if (!j.is_object())
                fail(path, "expected an object");
            reject_unknown(j, path,
                           {"position", "mx", "my", "spacing", "power_dbm", "pri", "pulse", "bandwidth", "noise_dbm",
                            "beam_deg"});
            RadarConfig r;
            read_vec3(j, "position", path, r.position);
            read_count(j, "mx", path, r.mx);
            read_count(j, "my", path, r.my);
            read_number(j, "spacing", path, r.spacing);
            read_number(j, "power_dbm", path, r.power_dbm);
            read_number(j, "pri", path, r.pri);
            read_number(j, "pulse", path, r.pulse);
            read_number(j, "bandwidth", path, r.bandwidth);
            read_number(j, "noise_dbm", path, r.noise_dbm);
            if (j.contains("beam_deg"))
            {
                const json &b = j.at("beam_deg");
                if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number())
                    fail(path + ".beam_deg", "expected [azimuth, elevation]");
                r.beam_deg = std::array<double, 2>{b[0].get<double>(), b[1].get<double>()};
            }
            return r;
        }

        TargetConfig parse_target(const json &j, const std::string &path)
        {
            reject_unknown(j, path,
                           {"position", "n1x", "n1y", "n2x", "n2y", "spacing", "beta_max", "zeta", "cssa",
                            "sensing_noise_dbm", "realizations"});
            TargetConfig t;
            read_vec3(j, "position", path, t.position);
            read_count(j, "n1x", path, t.n1x);
            read_count(j, "n1y", path, t.n1y);
            read_count(j, "n2x", path, t.n2x);
            read_count(j, "n2y", path, t.n2y);
            read_number(j, "spacing", path, t.spacing);
            read_number(j, "beta_max", path, t.beta_max);
            read_number(j, "sensing_noise_dbm", path, t.sensing_noise_dbm);
            read_count(j, "realizations", path, t.realizations);
            if (j.contains("zeta"))
            {
                const json &z = j.at("zeta");
                if (z.is_number())
                    t.zeta = {z.get<double>()};
                else if (z.is_array() && !z.empty())
                {
                    t.zeta.clear();
                    for (std::size_t i = 0; i < z.size(); ++i)
                    {
                        if (!z[i].is_number())
                            fail(path + ".zeta[" + std::to_string(i) + "]", "expected a number");
                        t.zeta.push_back(z[i].get<double>());
                    }
                }
                else
                    fail(path + ".zeta", "expected a number or a nonempty array");
            }
            if (j.contains("cssa"))
            {
                const std::string cpath = path + ".cssa";
                const json &c = object_at(j, "cssa", cpath);
                reject_unknown(c, cpath, {"lx", "ly"});
                read_count(c, "lx", cpath, t.cssa_lx);
                read_count(c, "ly", cpath, t.cssa_ly);
            }
            return t;
        }

        bool finite3(const std::array<double, 3> &p)
        {
            return std::isfinite(p[0]) && std::isfinite(p[1]) && std::isfinite(p[2]);
        }

        Vec3 to_vec(const std::array<double, 3> &p) { return {p[0], p[1], p[2]}; }
    }

    void ScenarioConfig::validate() const
    {
        if (!(wavelength > 0.0) || !std::isfinite(wavelength))
            fail("wavelength", "must be positive");
        if (!std::isfinite(alpha_db))
            fail("alpha_db", "must be finite");
        if (snapshots < 1)
            fail("snapshots", "must be positive");
        if (radars.empty())
            fail("radars", "need at least one radar");
        for (std::size_t k = 0; k < radars.size(); ++k)
        {
            const RadarConfig &r = radars[k];
            const std::string p = "radars[" + std::to_string(k) + "]";
            if (!finite3(r.position))
                fail(p + ".position", "must be finite");
            if (r.mx < 1)
                fail(p + ".mx", "must be positive");
            if (r.my < 1)
                fail(p + ".my", "must be positive");
            if (!(r.spacing > 0.0))
                fail(p + ".spacing", "must be positive");
            if (!std::isfinite(r.power_dbm))
                fail(p + ".power_dbm", "must be finite");
            if (!(r.pri > 0.0))
                fail(p + ".pri", "must be positive");
            if (!(r.pulse > 0.0 && r.pulse < r.pri))
                fail(p + ".pulse", "must satisfy 0 < pulse < pri");
            if (!(r.bandwidth >= 0.0) || !std::isfinite(r.bandwidth))
                fail(p + ".bandwidth", "must be nonnegative");
            if (!std::isfinite(r.noise_dbm))
                fail(p + ".noise_dbm", "must be finite");
            if (r.beam_deg && !AnglePair{deg2rad((*r.beam_deg)[0]), deg2rad((*r.beam_deg)[1])}.valid())
                fail(p + ".beam_deg", "angles must lie in (-90, 90) degrees");
        }
        const TargetConfig &t = target;
        if (!finite3(t.position))
            fail("target.position", "must be finite");
        if (t.n1x < 1)
            fail("target.n1x", "must be positive");
        if (t.n1y < 1)
            fail("target.n1y", "must be positive");
        if (t.n2x < 1)
            fail("target.n2x", "must be positive");
        if (t.n2y != t.n1y)
            fail("target.n2y", "must equal n1y (IRS and NIRS share the surface rows)");
        if (!(t.spacing > 0.0))
            fail("target.spacing", "must be positive");
        if (!(t.beta_max > 0.0 && t.beta_max <= 1.0))
            fail("target.beta_max", "must lie in (0, 1]");
        if (t.zeta.size() != 1 && t.zeta.size() != t.n2x * t.n2y)
            fail("target.zeta", "needs one value or n2x * n2y values");
        for (std::size_t i = 0; i < t.zeta.size(); ++i)
            if (!(t.zeta[i] >= 0.0 && t.zeta[i] <= 1.0))
                fail("target.zeta[" + std::to_string(i) + "]", "must lie in [0, 1]");
        if (t.cssa_lx < 1 || t.cssa_lx % 2 == 0)
            fail("target.cssa.lx", "must be a positive odd count");
        if (t.cssa_ly < 1 || t.cssa_ly % 2 == 0)
            fail("target.cssa.ly", "must be a positive odd count");
        if (!std::isfinite(t.sensing_noise_dbm))
            fail("target.sensing_noise_dbm", "must be finite");
        if (t.realizations < 1)
            fail("target.realizations", "must be positive");
    }

    double ScenarioConfig::zeta_bar() const
    {
        double s = 0.0;
        for (double z : target.zeta)
            s += z;
        return s / static_cast<double>(target.zeta.size());
    }

    ScenarioConfig parse_config(const std::string &json_text)
    {
        json j;
        try
        {
            j = json::parse(json_text);
        }
        catch (const json::parse_error &e)
        {
            fail("<root>", std::string("malformed JSON: ") + e.what());
        }
        if (!j.is_object())
            fail("<root>", "expected an object");
        reject_unknown(j, "", {"wavelength", "alpha_db", "seed", "snapshots", "radars", "target"});

        ScenarioConfig c;
        read_number(j, "wavelength", "", c.wavelength);
        read_number(j, "alpha_db", "", c.alpha_db);
        read_count(j, "seed", "", c.seed);
        read_count(j, "snapshots", "", c.snapshots);
        if (j.contains("radars"))
        {
            const json &rs = j.at("radars");
            if (!rs.is_array())
                fail("radars", "expected an array");
            c.radars.clear();
            for (std::size_t k = 0; k < rs.size(); ++k)
                c.radars.push_back(parse_radar(rs[k], "radars[" + std::to_string(k) + "]"));
        }
        if (j.contains("target"))
            c.target = parse_target(object_at(j, "target", "target"), "target");
        c.validate();
        return c;
    }

    std::string to_json(const ScenarioConfig &c)
    {
        json j;
        j["wavelength"] = c.wavelength;
        j["alpha_db"] = c.alpha_db;
        j["seed"] = c.seed;
        j["snapshots"] = c.snapshots;
        j["radars"] = json::array();
        for (const RadarConfig &r : c.radars)
        {
            json rj = {{"position", r.position}, {"mx", r.mx},          {"my", r.my},
                       {"spacing", r.spacing},   {"power_dbm", r.power_dbm}, {"pri", r.pri},
                       {"pulse", r.pulse},       {"bandwidth", r.bandwidth}, {"noise_dbm", r.noise_dbm}};
            if (r.beam_deg)
                rj["beam_deg"] = *r.beam_deg;
            j["radars"].push_back(rj);
        }
        const TargetConfig &t = c.target;
        j["target"] = {{"position", t.position},
                       {"n1x", t.n1x},
                       {"n1y", t.n1y},
                       {"n2x", t.n2x},
                       {"n2y", t.n2y},
                       {"spacing", t.spacing},
                       {"beta_max", t.beta_max},
                       {"zeta", t.zeta},
                       {"cssa", {{"lx", t.cssa_lx}, {"ly", t.cssa_ly}}},
                       {"sensing_noise_dbm", t.sensing_noise_dbm},
                       {"realizations", t.realizations}};
        return j.dump(2) + "\n";
    }

    ScenarioConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("cannot open config file " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str());
    }

    ScenarioConfig default_single_radar_config()
    {
        ScenarioConfig c;
        c.radars = {RadarConfig{}};
        return c;
    }

    ScenarioConfig default_three_radar_config()
    {
        ScenarioConfig c;
        RadarConfig r1, r2, r3;
        r2.position = {100.0, 0.0, 0.0};
        r3.position = {-100.0, 0.0, 0.0};
        // Distinct sweep rates keep the three echoes resolvable at the sensing array.
        r2.bandwidth = 105e6;
        r3.bandwidth = 110e6;
        c.radars = {r1, r2, r3};
        c.target.n1x = 25;
        return c;
    }

    double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    double watts_to_db(double watts) { return 10.0 * std::log10(watts); }

    Scenario build_scenario(const ScenarioConfig &config, std::uint64_t nirs_seed)
    {
        config.validate();
        const TargetConfig &tc = config.target;
        Scenario s;
        s.wavelength = config.wavelength;
        s.alpha = db_to_linear(config.alpha_db);

        TargetSurface &t = s.target;
        t.position = to_vec(tc.position);
        t.n1x = tc.n1x;
        t.n2x = tc.n2x;
        t.ny = tc.n1y;
        t.spacing = tc.spacing;
        t.beta_max = tc.beta_max;
        t.cssa = ArrayGeometry::cssa(tc.cssa_lx, tc.cssa_ly, tc.spacing);
        t.sensing_noise = dbm_to_watts(tc.sensing_noise_dbm);
        RealVec zeta(static_cast<Eigen::Index>(t.n2()));
        for (Eigen::Index n = 0; n < zeta.size(); ++n)
            zeta[n] = tc.zeta.size() == 1 ? tc.zeta[0] : tc.zeta[static_cast<std::size_t>(n)];
        t.nirs = NirsPanel::random(zeta, nirs_seed);

        for (std::size_t k = 0; k < config.radars.size(); ++k)
        {
            const RadarConfig &rc = config.radars[k];
            RadarNode r;
            r.geometry = ArrayGeometry::upa(rc.mx, rc.my, rc.spacing);
            r.position = to_vec(rc.position);
            r.tx_power = dbm_to_watts(rc.power_dbm);
            r.pri = rc.pri;
            r.pulse = rc.pulse;
            r.bandwidth = rc.bandwidth;
            r.noise_power = dbm_to_watts(rc.noise_dbm);
            s.radars.push_back(std::move(r));
        }
        for (std::size_t k = 0; k < s.radars.size(); ++k)
        {
            const std::string p = "radars[" + std::to_string(k) + "]";
            AnglePair beam;
            try
            {
                beam = link_geometry(s, k).at_radar;
            }
            catch (const InvalidArgument &e)
            {
                fail(p + ".position", e.what());
            }
            if (const auto &b = config.radars[k].beam_deg)
                beam = {deg2rad((*b)[0]), deg2rad((*b)[1])};
            s.radars[k].beamformer = matched_beamformer(s.radars[k], beam, s.wavelength);
        }
        s.validate();
        return s;
    }

    std::string config_hash(const ScenarioConfig &config)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char ch : to_json(config))
        {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
}
