#include "lsl/report.hpp"

#include "lsl/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace lsl {

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a + (b - a) * (i / double(n - 1));
    out.front() = a;
    out.back() = b;
    return out;
}

// Serpentine traversal: consecutive entries are always grid neighbours.
std::vector<std::pair<int, int>> serpentine(int nu, int nv) {
    std::vector<std::pair<int, int>> order;
    order.reserve(std::size_t(nu) * nv);
    for (int iu = 0; iu < nu; ++iu) {
        if (iu % 2 == 0)
            for (int iv = 0; iv < nv; ++iv) order.emplace_back(iu, iv);
        else
            for (int iv = nv - 1; iv >= 0; --iv) order.emplace_back(iu, iv);
    }
    return order;
}

// Reexpresses a classification in the frame with n_s negated.
void flip_frame_s(PointClassification& pc) {
    pc.frame.n_s = -pc.frame.n_s;
    pc.b_s.b11 = -pc.b_s.b11;
    pc.b_s.b12 = -pc.b_s.b12;
    pc.b_s.b22 = -pc.b_s.b22;
    pc.b_s.normal = -pc.b_s.normal;
    pc.census.b = -pc.census.b;
    for (auto& r : pc.census.roots) r = NormalDirection::canonical(-r.lambda, r.mu);
    if (pc.pseudo_umbilic)
        pc.pseudo_umbilic->direction = NormalDirection::canonical(
            -pc.pseudo_umbilic->direction.lambda, pc.pseudo_umbilic->direction.mu);
    pc.normal_curvature = -pc.normal_curvature;
}

void flip_frame_t(PointClassification& pc) {
    pc.frame.n_t = -pc.frame.n_t;
    pc.b_t.b11 = -pc.b_t.b11;
    pc.b_t.b12 = -pc.b_t.b12;
    pc.b_t.b22 = -pc.b_t.b22;
    pc.b_t.normal = -pc.b_t.normal;
    pc.census.b = -pc.census.b;
    for (auto& r : pc.census.roots) r = NormalDirection::canonical(r.lambda, -r.mu);
    if (pc.pseudo_umbilic)
        pc.pseudo_umbilic->direction = NormalDirection::canonical(
            pc.pseudo_umbilic->direction.lambda, -pc.pseudo_umbilic->direction.mu);
    pc.normal_curvature = -pc.normal_curvature;
}

struct FieldSweep {
    bool complete = false;       // a direction was assigned at every point
    double min_quality = 1.0;    // worst |cos| between consecutive choices
    bool sign_obstruction = false;
    double break_u = 0, break_v = 0;
    std::vector<Vec2> dirs;
};

// Tracks one projective direction field across the grid: at each point the
// candidate closest to the previous sample is chosen (over both signs);
// points flagged `free` accept any direction and carry the previous one.
FieldSweep sweep_field(const RegionReport& rep,
                       const std::vector<std::pair<int, int>>& order,
                       const std::vector<std::vector<Vec2>>& candidates,
                       const std::vector<bool>& free_point, const Vec2& seed,
                       double min_dot) {
    const int nu = rep.grid.nu, nv = rep.grid.nv;
    FieldSweep out;
    out.dirs.assign(std::size_t(nu) * nv, Vec2::Zero());
    Vec2 prev = seed.normalized();
    bool first = true;
    for (const auto& [iu, iv] : order) {
        const std::size_t idx = std::size_t(iu) * nv + iv;
        const auto& cand = candidates[idx];
        Vec2 chosen;
        if (free_point[idx] || cand.empty()) {
            chosen = prev;
        } else {
            double best = -2.0;
            for (const Vec2& c : cand)
                for (double s : {1.0, -1.0}) {
                    const double d = prev.dot(s * c.normalized());
                    if (d > best) {
                        best = d;
                        chosen = s * c.normalized();
                    }
                }
            if (!first && best < out.min_quality) {
                out.min_quality = best;
                const auto& pc = rep.points[idx];
                if (pc) {
                    out.break_u = pc->u;
                    out.break_v = pc->v;
                }
            }
        }
        out.dirs[idx] = chosen;
        prev = chosen;
        first = false;
    }
    out.complete = out.min_quality >= min_dot;
    if (!out.complete) return out;

    // Cross-check continuity on all grid edges, not only along the sweep;
    // a consistent line field with an unresolvable sign is reported, not
    // rejected.
    auto check_edge = [&](std::size_t a, std::size_t b) {
        if (free_point[a] || free_point[b]) return;
        const double d = out.dirs[a].dot(out.dirs[b]);
        if (std::abs(d) < min_dot) {
            out.complete = false;
        } else if (d < 0) {
            out.sign_obstruction = true;
        }
    };
    for (int iu = 0; iu < nu && out.complete; ++iu)
        for (int iv = 0; iv < nv && out.complete; ++iv) {
            const std::size_t idx = std::size_t(iu) * nv + iv;
            if (iu + 1 < nu) check_edge(idx, idx + nv);
            if (iv + 1 < nv) check_edge(idx, idx + 1);
        }
    return out;
}

}  // namespace

RegionReport classify_region(const SurfaceChart& chart, const GridSpec& grid,
                             const Tolerances& tol) {
    if (grid.nu < 2 || grid.nv < 2)
        throw ValidationError("classify_region: grid must be at least 2x2");
    RegionReport rep;
    rep.surface = chart.name;
    rep.family = chart.family;
    rep.domain = chart.domain;
    rep.grid = grid;
    rep.tol = tol;
    rep.points.assign(std::size_t(grid.nu) * grid.nv, std::nullopt);

    const std::vector<double> us = linspace(chart.domain.u0, chart.domain.u1, grid.nu);
    const std::vector<double> vs = linspace(chart.domain.v0, chart.domain.v1, grid.nv);
    const auto order = serpentine(grid.nu, grid.nv);

    bool have_prev = false;
    NormalFrame prev_frame;
    for (const auto& [iu, iv] : order) {
        const double u = us[iu], v = vs[iv];
        try {
            PointClassification pc = classify_point(eval_jet2(chart, u, v), tol);
            if (have_prev) {
                if (pc.frame.n_s.dot(prev_frame.n_s) < 0) flip_frame_s(pc);
                if (pc.frame.n_t.dot(prev_frame.n_t) < 0) flip_frame_t(pc);
            }
            prev_frame = pc.frame;
            have_prev = true;
            rep.points[std::size_t(iu) * grid.nv + iv] = std::move(pc);
        } catch (const Error& e) {
            rep.errors.push_back({u, v, e.what()});
        }
    }

    // Aggregates.
    const PointClassification* first_not_all = nullptr;
    const PointClassification* first_zero = nullptr;
    const PointClassification* first_not_umb = nullptr;
    const PointClassification* first_not_max = nullptr;
    const PointClassification* first_no_witness = nullptr;
    for (const auto& opt : rep.points) {
        if (!opt) continue;
        const PointClassification& pc = *opt;
        rep.census_counts[static_cast<int>(pc.census.kind)]++;
        if (pc.census.near_double) rep.near_double_count++;
        if (pc.is_flat_point) rep.flat_count++;
        if (!pc.theorem_consistent) rep.inconsistent_count++;
        if (pc.census.kind != CensusKind::All && !first_not_all) first_not_all = &pc;
        if (pc.census.kind == CensusKind::Zero && !first_zero) first_zero = &pc;
        if (!pc.is_umbilic_point && !first_not_umb) first_not_umb = &pc;
        if (!pc.is_maximal && !first_not_max) first_not_max = &pc;
        if (!pc.pseudo_umbilic && !first_no_witness) first_no_witness = &pc;
    }

    auto set_verdict = [](Verdict& v, bool value, const PointClassification* point,
                          std::string note) {
        v.value = value;
        v.note = std::move(note);
        if (point) {
            v.has_point = true;
            v.u = point->u;
            v.v = point->v;
        }
    };
    const PointClassification* any_point = nullptr;
    for (const auto& opt : rep.points)
        if (opt) {
            any_point = &*opt;
            break;
        }

    set_verdict(rep.planar, first_not_all == nullptr && any_point, first_not_all,
                first_not_all ? "census not 'all' here" : "census 'all' at every point");
    set_verdict(rep.umbilic, first_not_umb == nullptr && any_point, first_not_umb,
                first_not_umb ? "not umbilic here" : "umbilic at every point");
    set_verdict(rep.maximal, first_not_max == nullptr && any_point, first_not_max,
                first_not_max ? "mean curvature nonzero here" : "mean curvature vanishes");

    // Candidate directions for the two field sweeps.
    const std::size_t n = rep.points.size();
    std::vector<std::vector<Vec2>> root_cands(n), witness_cands(n);
    std::vector<bool> root_free(n, false), witness_free(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rep.points[i]) {
            root_free[i] = witness_free[i] = true;
            continue;
        }
        const PointClassification& pc = *rep.points[i];
        if (pc.census.kind == CensusKind::All)
            root_free[i] = true;
        else
            for (const auto& r : pc.census.roots) root_cands[i].push_back(Vec2(r.lambda, r.mu));
        if (pc.is_umbilic_point)
            witness_free[i] = true;
        else if (pc.pseudo_umbilic)
            witness_cands[i].push_back(
                Vec2(pc.pseudo_umbilic->direction.lambda, pc.pseudo_umbilic->direction.mu));
    }

    // pseudo-planar: no zero-census point and a continuously aligned root
    // field across the grid.
    if (!any_point) {
        set_verdict(rep.pseudo_planar, false, nullptr, "no classified points");
    } else if (first_zero) {
        set_verdict(rep.pseudo_planar, false, first_zero, "no bi-normal direction here");
    } else if (first_not_all == nullptr) {
        set_verdict(rep.pseudo_planar, true, any_point, "planar: any field is bi-normal");
    } else {
        bool found = false;
        for (const auto& seed_root : first_not_all->census.roots) {
            const Vec2 seed(seed_root.lambda, seed_root.mu);
            FieldSweep sweep = sweep_field(rep, order, root_cands, root_free, seed,
                                           tol.align_min_dot);
            if (sweep.complete) {
                found = true;
                rep.root_sign_obstruction = rep.root_sign_obstruction || sweep.sign_obstruction;
                break;
            }
        }
        set_verdict(rep.pseudo_planar, found, found ? any_point : first_not_all,
                    found ? "aligned bi-normal field found" : "root field alignment broke");
    }

    // pseudo-umbilic: witness everywhere plus an aligned witness field.
    if (!any_point) {
        set_verdict(rep.pseudo_umbilic, false, nullptr, "no classified points");
    } else if (first_no_witness) {
        set_verdict(rep.pseudo_umbilic, false, first_no_witness, "no umbilic witness here");
    } else {
        Vec2 seed(1, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (!witness_cands[i].empty()) {
                seed = witness_cands[i].front();
                break;
            }
        FieldSweep sweep =
            sweep_field(rep, order, witness_cands, witness_free, seed, tol.align_min_dot);
        rep.witness_sign_obstruction = sweep.sign_obstruction;
        set_verdict(rep.pseudo_umbilic, sweep.complete, any_point,
                    sweep.complete ? "aligned umbilic witness field found"
                                   : "witness field alignment broke");
    }

    return rep;
}

// ---------------------------------------------------------------------------
// Emitters
// ---------------------------------------------------------------------------

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

const char* bstr(bool b) { return b ? "true" : "false"; }

void emit_verdict(std::ostream& os, const char* name, const Verdict& v, bool last = false) {
    os << "    \"" << name << "\": {\"value\": " << bstr(v.value);
    if (v.has_point) os << ", \"u\": " << fmt(v.u) << ", \"v\": " << fmt(v.v);
    os << ", \"note\": \"" << json_escape(v.note) << "\"}" << (last ? "\n" : ",\n");
}

}  // namespace

void emit_json(const RegionReport& r, std::ostream& os) {
    os << "{\n";
    os << "  \"schema\": \"lsl-report/1\",\n";
    os << "  \"tool_version\": \"" << json_escape(r.tool_version) << "\",\n";
    os << "  \"config\": {\n";
    os << "    \"surface\": \"" << json_escape(r.surface) << "\",\n";
    os << "    \"family\": \"" << json_escape(r.family) << "\",\n";
    os << "    \"params\": {";
    bool first = true;
    for (const auto& [k, v] : r.params) {
        os << (first ? "" : ", ") << "\"" << json_escape(k) << "\": \"" << json_escape(v) << "\"";
        first = false;
    }
    os << "},\n";
    os << "    \"domain\": {\"u0\": " << fmt(r.domain.u0) << ", \"u1\": " << fmt(r.domain.u1)
       << ", \"v0\": " << fmt(r.domain.v0) << ", \"v1\": " << fmt(r.domain.v1) << "},\n";
    os << "    \"grid\": {\"nu\": " << r.grid.nu << ", \"nv\": " << r.grid.nv << "},\n";
    os << "    \"tolerances\": {\"causal\": " << fmt(r.tol.causal)
       << ", \"metric\": " << fmt(r.tol.metric) << ", \"normal\": " << fmt(r.tol.normal)
       << ", \"root\": " << fmt(r.tol.root) << ", \"disc\": " << fmt(r.tol.disc)
       << ", \"near_disc\": " << fmt(r.tol.near_disc) << ", \"umbilic\": " << fmt(r.tol.umbilic)
       << ", \"flat\": " << fmt(r.tol.flat) << ", \"semi\": " << fmt(r.tol.semi)
       << ", \"mean\": " << fmt(r.tol.mean)
       << ", \"align_min_dot\": " << fmt(r.tol.align_min_dot) << "}\n";
    os << "  },\n";
    os << "  \"verdicts\": {\n";
    emit_verdict(os, "planar", r.planar);
    emit_verdict(os, "pseudo_planar", r.pseudo_planar);
    emit_verdict(os, "pseudo_umbilic", r.pseudo_umbilic);
    emit_verdict(os, "umbilic", r.umbilic);
    emit_verdict(os, "maximal", r.maximal, true);
    os << "  },\n";
    os << "  \"summary\": {\n";
    os << "    \"census\": {\"zero\": " << r.census_counts[0] << ", \"one\": " << r.census_counts[1]
       << ", \"two\": " << r.census_counts[2] << ", \"all\": " << r.census_counts[3] << "},\n";
    os << "    \"near_double\": " << r.near_double_count << ",\n";
    os << "    \"flat_points\": " << r.flat_count << ",\n";
    os << "    \"inconsistent\": " << r.inconsistent_count << ",\n";
    os << "    \"root_sign_obstruction\": " << bstr(r.root_sign_obstruction) << ",\n";
    os << "    \"witness_sign_obstruction\": " << bstr(r.witness_sign_obstruction) << "\n";
    os << "  },\n";
    os << "  \"points\": [";
    first = true;
    for (const auto& opt : r.points) {
        if (!opt) continue;
        const PointClassification& p = *opt;
        os << (first ? "\n" : ",\n");
        first = false;
        os << "    {\"u\": " << fmt(p.u) << ", \"v\": " << fmt(p.v) << ", \"census\": \""
           << to_string(p.census.kind) << "\", \"near_double\": " << bstr(p.census.near_double)
           << ", \"roots\": [";
        for (std::size_t i = 0; i < p.census.roots.size(); ++i) {
            const auto& root = p.census.roots[i];
            os << (i ? ", " : "") << "{\"lambda\": " << fmt(root.lambda)
               << ", \"mu\": " << fmt(root.mu)
               << ", \"curvature\": " << fmt(p.root_curvatures[i]) << "}";
        }
        os << "], \"asymptotics\": [";
        for (std::size_t i = 0; i < p.asymptotics.size(); ++i) {
            const auto& a = p.asymptotics[i];
            os << (i ? ", " : "") << "{\"whole_plane\": " << bstr(a.whole_plane)
               << ", \"du\": " << fmt(a.coeffs[0]) << ", \"dv\": " << fmt(a.coeffs[1]) << "}";
        }
        os << "], \"umbilic\": " << bstr(p.is_umbilic_point) << ", \"pseudo_umbilic\": ";
        if (p.pseudo_umbilic)
            os << "{\"lambda\": " << fmt(p.pseudo_umbilic->direction.lambda)
               << ", \"mu\": " << fmt(p.pseudo_umbilic->direction.mu)
               << ", \"k\": " << fmt(p.pseudo_umbilic->k) << "}";
        else
            os << "null";
        os << ", \"flat_point\": " << bstr(p.is_flat_point)
           << ", \"flat_witnessed\": " << bstr(p.is_flat_witnessed)
           << ", \"semi_umbilic\": " << bstr(p.is_semi_umbilic)
           << ", \"maximal\": " << bstr(p.is_maximal)
           << ", \"normal_curvature\": " << fmt(p.normal_curvature) << ", \"mean_curvature\": ["
           << fmt(p.mean_curvature[0]) << ", " << fmt(p.mean_curvature[1]) << ", "
           << fmt(p.mean_curvature[2]) << ", " << fmt(p.mean_curvature[3])
           << "], \"consistent\": " << bstr(p.theorem_consistent) << "}";
    }
    os << "\n  ],\n";
    os << "  \"errors\": [";
    first = true;
    for (const auto& e : r.errors) {
        os << (first ? "\n" : ",\n");
        first = false;
        os << "    {\"u\": " << fmt(e.u) << ", \"v\": " << fmt(e.v) << ", \"message\": \""
           << json_escape(e.message) << "\"}";
    }
    os << "\n  ]\n";
    os << "}\n";
}

void emit_csv(const RegionReport& r, std::ostream& os) {
    os << "u,v,census,near_double,root1_lambda,root1_mu,root1_curvature,root2_lambda,root2_mu,"
          "root2_curvature,asym1_whole_plane,asym1_du,asym1_dv,asym2_whole_plane,asym2_du,"
          "asym2_dv,umbilic,pseudo_umbilic,witness_lambda,witness_mu,witness_k,flat_point,"
          "flat_witnessed,semi_umbilic,maximal,normal_curvature,mean1,mean2,mean3,mean4,"
          "consistent\n";
    for (const auto& opt : r.points) {
        if (!opt) continue;
        const PointClassification& p = *opt;
        os << fmt(p.u) << ',' << fmt(p.v) << ',' << to_string(p.census.kind) << ','
           << int(p.census.near_double);
        for (int i = 0; i < 2; ++i) {
            if (i < int(p.census.roots.size()))
                os << ',' << fmt(p.census.roots[i].lambda) << ',' << fmt(p.census.roots[i].mu)
                   << ',' << fmt(p.root_curvatures[i]);
            else
                os << ",,,";
        }
        for (int i = 0; i < 2; ++i) {
            if (i < int(p.asymptotics.size()))
                os << ',' << int(p.asymptotics[i].whole_plane) << ','
                   << fmt(p.asymptotics[i].coeffs[0]) << ',' << fmt(p.asymptotics[i].coeffs[1]);
            else
                os << ",,,";
        }
        os << ',' << int(p.is_umbilic_point) << ',' << int(bool(p.pseudo_umbilic));
        if (p.pseudo_umbilic)
            os << ',' << fmt(p.pseudo_umbilic->direction.lambda) << ','
               << fmt(p.pseudo_umbilic->direction.mu) << ',' << fmt(p.pseudo_umbilic->k);
        else
            os << ",,,";
        os << ',' << int(p.is_flat_point) << ',' << int(p.is_flat_witnessed) << ','
           << int(p.is_semi_umbilic) << ',' << int(p.is_maximal) << ','
           << fmt(p.normal_curvature) << ',' << fmt(p.mean_curvature[0]) << ','
           << fmt(p.mean_curvature[1]) << ',' << fmt(p.mean_curvature[2]) << ','
           << fmt(p.mean_curvature[3]) << ',' << int(p.theorem_consistent) << '\n';
    }
}

void emit_text(const RegionReport& r, std::ostream& os) {
    auto fmt = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", x);
        return std::string(buf);
    };
    os << "surface: " << r.surface << " (family " << r.family << ")\n";
    os << "domain: u in [" << fmt(r.domain.u0) << ", " << fmt(r.domain.u1) << "], v in ["
       << fmt(r.domain.v0) << ", " << fmt(r.domain.v1) << "]; grid " << r.grid.nu << " x "
       << r.grid.nv << "\n";
    os << "census histogram: zero " << r.census_counts[0] << " | one " << r.census_counts[1]
       << " | two " << r.census_counts[2] << " | all " << r.census_counts[3] << "\n";
    os << "flat points: " << r.flat_count << "; near-double: " << r.near_double_count
       << "; inconsistent: " << r.inconsistent_count << "\n";
    auto line = [&](const char* name, const Verdict& v) {
        os << name << ": " << (v.value ? "yes" : "no");
        if (!v.note.empty()) {
            os << " (" << v.note;
            if (v.has_point && !v.value) os << " at u=" << fmt(v.u) << ", v=" << fmt(v.v);
            os << ")";
        }
        os << "\n";
    };
    line("planar", r.planar);
    line("pseudo-planar", r.pseudo_planar);
    line("pseudo-umbilic", r.pseudo_umbilic);
    line("umbilic", r.umbilic);
    line("maximal", r.maximal);
    os << "errors: " << r.errors.size() << "\n";
    for (const auto& e : r.errors)
        os << "  (" << fmt(e.u) << ", " << fmt(e.v) << "): " << e.message << "\n";
}

}  // namespace lsl
