#pragma once

// Config files, CSV output and run manifests.
//
// Lattice polygon JSON: {"N": 8, "A": ["-1/2","3/2"], "B": ["1/2","13/2"]}
// (half-integers as exact fraction strings). Limit polygon JSON:
// {"a": ["-1","-0.5"], "b": ["-0.5","1"]} (decimal strings or numbers).

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "lozenge/oracle.hpp"
#include "lozenge/polygon.hpp"

namespace lozenge {

PolygonSpec load_polygon(const std::string& path);
LimitPolygon load_limit_polygon(const std::string& path);
std::string polygon_to_json(const PolygonSpec& spec);

std::string array_to_json_line(const ParticleArray& arr);
ParticleArray array_from_json_line(const std::string& line);

// %.17g float formatting so reruns are byte-identical.
std::string format_double(double v);

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& fields);

private:
    std::ofstream out_;
    size_t width_;
};

std::uint64_t fnv1a_file(const std::string& path);

// Written alongside every output file; deterministic (no timestamps).
void write_manifest(const std::string& output_path, const std::string& subcommand,
                    const std::vector<std::string>& config_paths, std::uint64_t seed,
                    int workers);

}  // namespace lozenge
