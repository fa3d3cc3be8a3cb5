#include "heatlat/records.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "heatlat/errors.hpp"

namespace heatlat {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void put_row(std::string& out, const char* kind, double t, std::int64_t site, int axis, double v) {
    out += kind;
    out += ',';
    out += format_double(t);
    out += ',';
    out += std::to_string(site);
    out += ',';
    out += std::to_string(axis);
    out += ',';
    out += format_double(v);
    out += '\n';
}

}  // namespace

void write_record_csv(const TrajectoryRecord& rec, const std::string& path) {
    std::string out;
    out.reserve(1 << 20);
    out += "kind,t,site,axis,value\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "seed,0,%d,-1,%" PRIu64 "\n", rec.replica, rec.seed);
    out += buf;
    put_row(out, "dim", 0.0, rec.dim, -1, 0.0);
    put_row(out, "n", 0.0, rec.n, -1, 0.0);
    put_row(out, "jtot_dt", 0.0, -1, -1, rec.jtot_dt);
    for (std::size_t m = 0; m < rec.times.size(); ++m) {
        const double t = rec.times[m];
        put_row(out, "H", t, -1, -1, rec.total_energy[m]);
        const ScalarField& e = rec.energy[m];
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(e.size()); ++s)
            put_row(out, "e", t, s, -1, e[s]);
        if (!rec.j_a.empty()) {
            const auto& ja = rec.j_a[m];
            const auto& js = rec.j_s[m];
            const std::int64_t sites = static_cast<std::int64_t>(e.size());
            for (std::int64_t s = 0; s < sites; ++s)
                for (int a = 0; a < rec.dim; ++a) {
                    put_row(out, "ja", t, s, a, ja[s * rec.dim + a]);
                    put_row(out, "js", t, s, a, js[s * rec.dim + a]);
                }
        }
    }
    for (std::size_t i = 0; i < rec.jtot_series.size(); ++i)
        put_row(out, "J", static_cast<double>(i) * rec.jtot_dt, -1, 0, rec.jtot_series[i]);

    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) throw IoError("write failed: " + path);
}

TrajectoryRecord read_record_csv(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open record: " + path);
    TrajectoryRecord rec;
    std::string line;
    std::getline(f, line);  // header
    std::int64_t sites = 0;
    int time_index = -1;
    double current_t = 0.0;
    bool have_time = false;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        // kind,t,site,axis,value
        const char* s = line.c_str();
        const char* c1 = std::strchr(s, ',');
        if (!c1) throw IoError("malformed record row in " + path);
        std::string kind(s, c1 - s);
        char* end = nullptr;
        const double t = std::strtod(c1 + 1, &end);
        const std::int64_t site = std::strtoll(end + 1, &end, 10);
        const int axis = static_cast<int>(std::strtol(end + 1, &end, 10));
        const char* vstr = end + 1;
        if (kind == "seed") {
            rec.replica = static_cast<int>(site);
            rec.seed = std::strtoull(vstr, nullptr, 10);
            continue;
        }
        const double v = std::strtod(vstr, nullptr);
        if (kind == "dim") {
            rec.dim = static_cast<int>(site);
        } else if (kind == "n") {
            rec.n = static_cast<int>(site);
            sites = 1;
            for (int a = 0; a < rec.dim; ++a) sites *= rec.n;
        } else if (kind == "jtot_dt") {
            rec.jtot_dt = v;
        } else if (kind == "H") {
            rec.times.push_back(t);
            rec.total_energy.push_back(v);
            rec.energy.emplace_back(sites, 0.0);
            ++time_index;
            current_t = t;
            have_time = true;
        } else if (kind == "e") {
            if (!have_time || t != current_t) throw IoError("record rows out of order: " + path);
            rec.energy[time_index][site] = v;
        } else if (kind == "ja" || kind == "js") {
            auto& vecs = kind == "ja" ? rec.j_a : rec.j_s;
            if (vecs.size() <= static_cast<std::size_t>(time_index))
                vecs.resize(time_index + 1, std::vector<double>(sites * rec.dim, 0.0));
            vecs[time_index][site * rec.dim + axis] = v;
        } else if (kind == "J") {
            rec.jtot_series.push_back(v);
        } else {
            throw IoError("unknown record row kind '" + kind + "' in " + path);
        }
    }
    return rec;
}

}  // namespace heatlat
