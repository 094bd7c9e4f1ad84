/* Copyright (c) 2026 The antiorb Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */


#pragma once

// JSON encodings of the library's value types and reports, and the AORB1
// binary format for function tables.
//
// AORB1 layout (all integers little-endian):
//   "AORB1"           5 bytes
//   p, k, N           uint32 each
//   sqrt_q_exponent   int32
//   meta_len          uint32, then meta_len bytes of space-descriptor JSON
//   q^N records       p-1 int64 canonical coefficients each

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "antiorb/casestudies.hpp"
#include "antiorb/invariants.hpp"
#include "antiorb/quiver.hpp"
#include "antiorb/space.hpp"

namespace antiorb {

using Json = nlohmann::ordered_json;

std::string library_version();

Json to_json(const CycNum& c);
CycNum cyc_from_json(unsigned p, const Json& j);

Json to_json(const FqField& f);
FieldPtr field_from_json(const Json& j);

Json to_json(const SegmentClass& s);
Json to_json(const Multisegment& s);
Multisegment multisegment_from_json(unsigned m, const Json& j);
Json to_json(const PartitionMult& rho);

Json to_json(const QuiverRep& t);
QuiverRep quiver_rep_from_json(const FieldPtr& field, const Json& j);
Json to_json(const OrbitLabel& l);
Json to_json(const StratumLabel& l);

Json to_json(const SpaceDescriptor& s);
SpaceDescriptor space_from_json(const Json& j);

Json to_json(const FuncTable& t);
FuncTable func_table_from_json(const Json& j);
void write_func_table_binary(std::ostream& os, const FuncTable& t);
FuncTable read_func_table_binary(std::istream& is);
/// JSON when the path ends in ".json", AORB1 otherwise.
void save_func_table(const std::string& path, const FuncTable& t);
/// Detects the format from the first bytes.
FuncTable load_func_table(const std::string& path);

Json to_json(const ColinearityReport& r);
Json to_json(const CommutationReport& r);
Json to_json(const QuadricReport& r);
Json to_json(const SymplecticReport& r);
Json to_json(const SymmetricReport& r);
Json to_json(const UnipotentReport& r);

}  // namespace antiorb
