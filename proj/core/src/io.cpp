#include "lozenge/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lozenge {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

double number_or_string(const json& v, const char* what) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return to_double(rational_from_string(v.get<std::string>()));
    throw std::invalid_argument(std::string("expected number or string for ") + what);
}

}  // namespace

PolygonSpec load_polygon(const std::string& path) {
    json j = parse_file(path);
    if (!j.contains("N") || !j.contains("A") || !j.contains("B"))
        throw std::invalid_argument("polygon config needs fields N, A, B: " + path);
    PolygonSpec spec;
    spec.N = j.at("N").get<int>();
    for (const auto& v : j.at("A")) spec.A.push_back(HalfInt::parse(v.get<std::string>()));
    for (const auto& v : j.at("B")) spec.B.push_back(HalfInt::parse(v.get<std::string>()));
    require_valid(spec);
    return spec;
}

LimitPolygon load_limit_polygon(const std::string& path) {
    json j = parse_file(path);
    if (!j.contains("a") || !j.contains("b"))
        throw std::invalid_argument("limit polygon config needs fields a, b: " + path);
    LimitPolygon lp;
    for (const auto& v : j.at("a")) lp.a.push_back(number_or_string(v, "a"));
    for (const auto& v : j.at("b")) lp.b.push_back(number_or_string(v, "b"));
    require_valid(lp);
    return lp;
}

std::string polygon_to_json(const PolygonSpec& spec) {
    json j;
    j["N"] = spec.N;
    for (const auto& a : spec.A) j["A"].push_back(a.str());
    for (const auto& b : spec.B) j["B"].push_back(b.str());
    return j.dump();
}

std::string array_to_json_line(const ParticleArray& arr) {
    json j;
    j["rows"] = arr.rows;
    return j.dump();
}

ParticleArray array_from_json_line(const std::string& line) {
    json j = json::parse(line);
    ParticleArray arr;
    arr.rows = j.at("rows").get<std::vector<std::vector<long>>>();
    return arr;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), width_(header.size()) {
    if (!out_) throw std::invalid_argument("cannot open output file: " + path);
    for (size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
    out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    if (fields.size() != width_) throw std::logic_error("csv row width mismatch");
    for (size_t i = 0; i < fields.size(); ++i) out_ << (i ? "," : "") << fields[i];
    out_ << "\n";
}

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot hash missing file: " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

void write_manifest(const std::string& output_path, const std::string& subcommand,
                    const std::vector<std::string>& config_paths, std::uint64_t seed,
                    int workers) {
    json j;
    j["tool"] = "lozenge";
    j["version"] = "0.1.0";
    j["subcommand"] = subcommand;
    j["seed"] = seed;
    j["workers"] = workers;
    for (const auto& p : config_paths) {
        std::ostringstream os;
        os << std::hex << fnv1a_file(p);
        j["config_hash"][p] = os.str();
    }
    j["output"] = output_path;
    std::ofstream out(output_path + ".manifest.json");
    out << j.dump(2) << "\n";
}

}  // namespace lozenge
