#include "mfheight/coeffio.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace mfh {

namespace {

std::map<std::string, std::string> parse_header(const std::string& line,
                                                const std::string& expect_tag,
                                                const std::string& path) {
    std::istringstream hs(line);
    std::string tag, ver;
    hs >> tag >> ver;
    if (tag != expect_tag || ver != "v1")
        throw IoError(path + ": expected '" + expect_tag + " v1' header, got '" + line + "'");
    std::map<std::string, std::string> kv;
    std::string field;
    while (hs >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos)
            throw IoError(path + ": malformed header field '" + field + "'");
        kv[field.substr(0, eq)] = field.substr(eq + 1);
    }
    return kv;
}

}  // namespace

CuspFormExpansion read_coeff_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw IoError(path + ": empty file");
    auto kv = parse_header(line, "coeffs", path);
    if (!kv.count("weight") || !kv.count("level"))
        throw IoError(path + ": header needs weight= and level=");
    CuspFormExpansion f;
    f.weight = Rat(kv["weight"]);
    f.level = std::stol(kv["level"]);
    long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long n;
        std::string v;
        if (!(ls >> n >> v))
            throw IoError(path + ": malformed row at line " + std::to_string(lineno));
        if (n < 1)
            throw IoError(path + ": cusp forms have no a_0; bad n at line " +
                          std::to_string(lineno));
        f.set(n, Rat(v));
    }
    return f;
}

void write_coeff_file(const std::string& path, const CuspFormExpansion& f) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "coeffs v1 weight=" << f.weight.str() << " level=" << f.level << "\n";
    for (const auto& [n, v] : f.a) out << n << " " << v.str() << "\n";
}

VVCoeffFile read_vv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw IoError(path + ": empty file");
    auto kv = parse_header(line, "vvcoeffs", path);
    if (!kv.count("N") || !kv.count("weight") || !kv.count("trunc"))
        throw IoError(path + ": header needs N=, weight= and trunc=");
    VVCoeffFile f;
    f.N = std::stol(kv["N"]);
    f.weight = Rat(kv["weight"]);
    f.dual = kv.count("dual") ? kv["dual"] == "1" : false;
    f.series = VVQExpansion(2 * f.N, Rat(kv["trunc"]));
    long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string e, v;
        long mu;
        if (!(ls >> e >> mu >> v))
            throw IoError(path + ": malformed row at line " + std::to_string(lineno));
        Rat expo(e);
        if (!(expo < f.series.truncation()))
            throw IoError(path + ": exponent beyond trunc at line " + std::to_string(lineno));
        long comp = ((mu % (2 * f.N)) + 2 * f.N) % (2 * f.N);
        f.series.add_term(expo, comp, Coef(Rat(v)));
    }
    return f;
}

void write_vv_file(const std::string& path, const VVCoeffFile& f) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "vvcoeffs v1 N=" << f.N << " weight=" << f.weight.str()
        << " dual=" << (f.dual ? 1 : 0) << " trunc=" << f.series.truncation().str() << "\n";
    for (const auto& [key, c] : f.series.terms()) {
        if (!c.is_rat()) throw IoError("write_vv_file: only rational coefficients supported");
        out << key.first.str() << " " << key.second << " " << c.rat().str() << "\n";
    }
}

}  // namespace mfh
