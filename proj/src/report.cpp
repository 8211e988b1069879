#include "gaussmap/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gaussmap {

void CheckReport::add_meta(const std::string& k, double v) {
    meta.emplace_back(k, format_double(v));
}

void CheckReport::finalize() {
    pass = true;
    for (auto& f : fields) {
        if (f.tol) f.pass = f.max_abs <= *f.tol;
        if (f.tol && !f.pass) pass = false;
    }
}

const FieldStat* CheckReport::field(const std::string& name) const {
    for (const auto& f : fields)
        if (f.name == name) return &f;
    return nullptr;
}

FieldStat field_from_grid(const std::string& name, const ScalarField& g,
                          std::optional<double> tol) {
    FieldStat fs;
    fs.name = name;
    fs.tol = tol;
    long double sum = 0;
    long n = 0;
    for (int i = 0; i < g.Nu; ++i)
        for (int j = 0; j < g.Nv; ++j) {
            const double x = g.at(i, j);
            if (std::isnan(x)) continue;
            const double a = std::abs(x);
            sum += a;
            ++n;
            if (a > fs.max_abs) {
                fs.max_abs = a;
                fs.argmax_i = i;
                fs.argmax_j = j;
            }
        }
    fs.mean_abs = n ? static_cast<double>(sum / n) : 0.0;
    if (tol) fs.pass = fs.max_abs <= *tol;
    return fs;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            r += '\\';
            r += c;
        } else if (c == '\n') {
            r += "\\n";
        } else {
            r += c;
        }
    }
    return r;
}

}  // namespace

std::string report_to_json(const CheckReport& r) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"check\": \"" << json_escape(r.check) << "\",\n";
    os << "  \"surface\": \"" << json_escape(r.surface) << "\",\n";
    os << "  \"params\": {";
    for (size_t k = 0; k < r.params.size(); ++k) {
        if (k) os << ", ";
        os << "\"" << json_escape(r.params[k].first) << "\": "
           << format_double(r.params[k].second);
    }
    os << "},\n";
    os << "  \"grid\": [" << r.Nu << ", " << r.Nv << "],\n";
    os << "  \"richardson\": " << (r.richardson ? "true" : "false") << ",\n";
    os << "  \"fields\": [\n";
    for (size_t k = 0; k < r.fields.size(); ++k) {
        const FieldStat& f = r.fields[k];
        os << "    {\"name\": \"" << json_escape(f.name) << "\", \"max_abs\": "
           << format_double(f.max_abs) << ", \"mean_abs\": " << format_double(f.mean_abs)
           << ", \"argmax\": [" << f.argmax_i << ", " << f.argmax_j << "], \"tol\": ";
        if (f.tol)
            os << format_double(*f.tol);
        else
            os << "null";
        os << ", \"pass\": ";
        if (f.tol)
            os << (f.pass ? "true" : "false");
        else
            os << "null";
        os << "}";
        if (k + 1 < r.fields.size()) os << ",";
        os << "\n";
    }
    os << "  ],\n";
    os << "  \"audit\": {\"s_fit\": ";
    if (r.audit.s_fit)
        os << format_double(*r.audit.s_fit);
    else
        os << "null";
    os << ", \"c_t_fit\": ";
    if (r.audit.c_t_fit)
        os << format_double(*r.audit.c_t_fit);
    else
        os << "null";
    os << ", \"ar_sign\": ";
    if (r.audit.ar_sign)
        os << *r.audit.ar_sign;
    else
        os << "null";
    os << "},\n";
    os << "  \"meta\": {";
    for (size_t k = 0; k < r.meta.size(); ++k) {
        if (k) os << ", ";
        os << "\"" << json_escape(r.meta[k].first) << "\": \""
           << json_escape(r.meta[k].second) << "\"";
    }
    os << "},\n";
    os << "  \"verdict\": \"" << (r.pass ? "pass" : "fail") << "\"\n";
    os << "}\n";
    return os.str();
}

std::string grid_to_csv(const NamedGrid& g) {
    std::ostringstream os;
    os << "u,v,value\n";
    for (int i = 0; i < g.values.Nu; ++i)
        for (int j = 0; j < g.values.Nv; ++j) {
            const double x = g.values.at(i, j);
            if (std::isnan(x)) continue;
            os << format_double(g.us[i]) << "," << format_double(g.vs[j]) << ","
               << format_double(x) << "\n";
        }
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace gaussmap
