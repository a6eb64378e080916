#pragma once

// Sample-file readers and JSON / CSV serialization. Exact scalars are always
// written as "p/q" strings.

#include "multijet/coalesce.hpp"
#include "multijet/jetoracle.hpp"
#include "multijet/lattice.hpp"
#include "multijet/multiprolong.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace multijet {

class IoError : public Error {
public:
    using Error::Error;
};

using Json = nlohmann::ordered_json;

/// Rows "x,u"; an optional header row, blank lines and '#' comments are
/// skipped. Errors carry 1-based line numbers.
PointedCurveSamples parse_samples_csv(const std::string& text);
PointedCurveSamples read_samples_csv(const std::string& path);

/// Rows "x,multiplicity,u,u',...,u^(multiplicity-1)".
ConfluentSamples parse_confluent_csv(const std::string& text);
ConfluentSamples read_confluent_csv(const std::string& path);

std::string read_file(const std::string& path);
/// Writes to `path`, or to stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& text);

Json scalars_to_json(const std::vector<ExactScalar>& xs);
Json rows_to_json(const std::vector<std::vector<ExactScalar>>& rows);
Json to_json(const ProlongationResult& r);
Json to_json(const ProlongedVectorField& p);
Json to_json(const CoalesceReport& r);

std::string to_csv(const ProlongationResult& r);
std::string to_csv(const CoalesceReport& r);

}  // namespace multijet
