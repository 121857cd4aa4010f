#pragma once

#include <string>

#include <json.hpp>

#include "stabcov/charge.hpp"
#include "stabcov/covering.hpp"
#include "stabcov/fm_words.hpp"
#include "stabcov/hearts.hpp"
#include "stabcov/lattice.hpp"
#include "stabcov/strata.hpp"

// JSON encoding of the library types. Rationals travel as canonical "p/q"
// strings, integers as JSON numbers. Objects use sorted keys, so a dump of
// the same value is byte-for-byte stable.
namespace stabcov::io {

using nlohmann::json;

Rational rational_from_json(const json& j);
json to_json(const Rational& q);
QVec qvec_from_json(const json& j);
json to_json(const QVec& v);
IntVec intvec_from_json(const json& j);

DualGraph graph_from_json(const json& j);
json to_json(const DualGraph& g);

ComplexDivisor point_from_json(const json& j);
json to_json(const ComplexDivisor& p);

PLPath path_from_json(const json& j);
json to_json(const PLPath& p);

// [a, m_1, ..., m_N]
KClass kclass_from_json(const json& j);
json to_json(const KClass& c);

json to_json(const ExactComplex& z);
json to_json(const Root& r);
json to_json(const IntMatrix& m);
json to_json(const WeylElement& w);
json to_json(const AffineMap& t);

FMWord word_from_json(const json& j);
json to_json(const FMWord& u);

json to_json(const StratumLabel& s);
json to_json(const HeartDescriptor& h);
json to_json(const StabilityReport& r);

json to_json(const Crossing& c);
json to_json(const LiftResult& r);
json to_json(const DeckElement& d);

json read_json_file(const std::string& path);

// Comma-separated rationals, e.g. "1/2,-3".
QVec parse_qvec_list(const std::string& text);
IntVec parse_int_list(const std::string& text);

}  // namespace stabcov::io
