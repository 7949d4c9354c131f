#pragma once

// Runs the full pipeline over every enumerated toric class.

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "horofano/enumerate.hpp"
#include "horofano/instance.hpp"
#include "horofano/report.hpp"

namespace horofano::io {

struct SweepEntry {
    Instance instance;
    std::size_t raw_count = 0;
    Analysis analysis;
};

struct Sweep {
    toric::EnumOptions options;
    std::vector<SweepEntry> entries;
    std::size_t equalities = 0;
    std::map<std::pair<Integer, long>, std::size_t> histogram;  // (ι̂, ρ) -> count
    int exit_code = 0;
};

inline Sweep run_sweep(const toric::EnumOptions& opt) {
    Sweep s;
    s.options = opt;
    for (const auto& cls : toric::enumerate_reflexive(opt)) {
        SweepEntry entry{toric_instance(static_cast<std::size_t>(opt.dim), cls.canonical), cls.raw_count, {}};
        entry.analysis = analyze_instance(entry.instance);
        const auto& a = entry.analysis;
        s.exit_code = std::max(s.exit_code, a.exit_code());
        if (a.status == Status::Valid) {
            ++s.histogram[{a.theorem->iota_hat, a.theorem->rho}];
            if (a.theorem->equality) ++s.equalities;
        }
        s.entries.push_back(std::move(entry));
    }
    return s;
}

inline Json sweep_json(const Sweep& s) {
    Json list = Json::array();
    for (const auto& entry : s.entries) {
        const auto& a = entry.analysis;
        Json j;
        j["vertices"] = emit_instance(entry.instance)["polytope"]["vertices"];
        j["raw_count"] = entry.raw_count;
        j["status"] = a.status == Status::Valid ? "valid" : a.status == Status::Invalid ? "invalid" : "inconsistent";
        if (a.status != Status::Valid) {
            j["message"] = a.message;
            list.push_back(j);
            continue;
        }
        const auto& t = *a.theorem;
        j["iota_hat"] = to_json(t.iota_hat);
        j["epsilon_Q"] = to_json(t.epsilon);
        j["rho"] = t.rho;
        j["d"] = t.d;
        j["lhs"] = to_json(t.lhs);
        j["equality"] = t.equality;
        j["classification"] = t.equality ? Json(product_text(t.classification->factors)) : Json(nullptr);
        list.push_back(j);
    }
    Json dist = Json::array();
    for (const auto& [key, count] : s.histogram)
        dist.push_back(Json{{"iota_hat", to_json(key.first)}, {"rho", key.second}, {"count", count}});
    Json root;
    root["dim"] = s.options.dim;
    root["box"] = s.options.box;
    root["simplicial_only"] = s.options.simplicial_only;
    root["polytopes"] = list;
    root["summary"] = Json{{"classes", s.entries.size()}, {"equality_cases", s.equalities}, {"iota_rho_distribution", dist}};
    return root;
}

inline std::string sweep_text(const Sweep& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        const auto& e = s.entries[i];
        out << "#" << (i + 1) << " " << emit_instance(e.instance)["polytope"]["vertices"].dump();
        if (e.analysis.status != Status::Valid) {
            out << "  " << e.analysis.message << "\n";
            continue;
        }
        const auto& t = *e.analysis.theorem;
        out << "  iota=" << t.iota_hat << " rho=" << t.rho << " (iota-1)rho=" << t.lhs << " d=" << t.d;
        if (t.equality) out << "  equality: " << product_text(t.classification->factors);
        out << "\n";
    }
    out << "\nclasses: " << s.entries.size() << ", equality cases: " << s.equalities << "\n  iota  rho  count\n";
    for (const auto& [key, count] : s.histogram) out << "  " << key.first << "     " << key.second << "    " << count << "\n";
    return out.str();
}

}  // namespace horofano::io
