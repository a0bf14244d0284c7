// Copyright 2026 The planedec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planedec/small_cases.hpp"

#include <cstddef>
#include <string>

#include "detail/sha256.hpp"
#include "planedec/io.hpp"
#include "planedec/verify.hpp"

namespace planedec {

namespace {

#include "embedded_small_cases.inc"  // generated from data/*.json

struct CuratedEntry {
  FamilyTag family;
  int p;
  int n;
  int pages;
  const unsigned char* bytes;
  std::size_t size;
  const char* sha256;
};

// Pinned digests of the shipped documents. A mismatch means the data file
// was edited without re-pinning and is treated as corruption.
const CuratedEntry kEntries[] = {
    {FamilyTag::K1NN, 1, 6, 2, k_k1nn_p1, sizeof(k_k1nn_p1),
     "ffa06494ac71ebf921f837f814168c7f26113946a4e8676138c78f8fcc445556"},
    {FamilyTag::K1NN, 2, 10, 3, k_k1nn_p2, sizeof(k_k1nn_p2),
     "cb40e4ee978dedaea878f3411624bc3c0e6047a88e912ab2a9ba86b493df8f95"},
    {FamilyTag::K1NN, 3, 14, 4, k_k1nn_p3, sizeof(k_k1nn_p3),
     "f7e5f7827ae5838811bfa1ff5a199410c8074aa2b0999f642440ae2979e2b321"},
    {FamilyTag::K2NN, 1, 5, 2, k_k2nn_p1, sizeof(k_k2nn_p1),
     "a6d96bda07361410c29bdcc18521997dccd98f3c6b14493264ad719c1dd7ab3c"},
    {FamilyTag::K2NN, 2, 9, 3, k_k2nn_p2, sizeof(k_k2nn_p2),
     "b1caf2751faf046b35053870159398eb8e54374a0d99d9787df07c90062a1801"},
    {FamilyTag::K2NN, 3, 13, 4, k_k2nn_p3, sizeof(k_k2nn_p3),
     "809abd05b975d89fd1124e89eede4aad86320cd387d9abbf9fafe949961ca453"},
};

const CuratedEntry& find_entry(FamilyTag family, int p) {
  for (const CuratedEntry& entry : kEntries) {
    if (entry.family == family && entry.p == p) return entry;
  }
  throw InvalidInputError("no curated data for this family/p");
}

}  // namespace

std::string_view curated_small_case_document(FamilyTag family, int p) {
  const CuratedEntry& entry = find_entry(family, p);
  std::string_view text(reinterpret_cast<const char*>(entry.bytes), entry.size);
  std::string digest = detail::sha256_hex(text);
  if (digest != entry.sha256) {
    throw ConstructionError(
        "curated data for p=" + std::to_string(p) +
        " failed its checksum (got " + digest + "); refusing to regenerate");
  }
  return text;
}

Decomposition curated_small_case(FamilyTag family, int p) {
  const CuratedEntry& entry = find_entry(family, p);
  Decomposition d = load_decomposition(curated_small_case_document(family, p));
  if (d.family.tag != family || d.n != entry.n) {
    throw ConstructionError("curated document header does not match its slot");
  }
  VerificationReport report = verify_decomposition(d, entry.pages);
  if (!report.overall) {
    throw ConstructionError("curated data for n=" + std::to_string(entry.n) +
                            " failed verification");
  }
  return d;
}

}  // namespace planedec
