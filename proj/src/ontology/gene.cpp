// Copyright 2026 The OncoKG Authors.
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

#include "onco/ontology/gene.hpp"

#include <sstream>

#include "onco/error.hpp"
#include "onco/ontology/cancer.hpp"
#include "onco/ontology/vocab.hpp"

namespace onco::ontology {

using rdf::Term;
using rdf::Triple;

GeneType parse_gene_type(const std::string& token) {
  if (token == "Oncogene") return GeneType::kOncogene;
  if (token == "Protein-coding" || token == "ProteinCoding") return GeneType::kProteinCoding;
  if (token == "POTSF" || token == "POTFS") return GeneType::kPotsf;
  throw StructuralError("unknown gene type token: '" + token + "'");
}

SignificanceLevel parse_significance(const std::string& token) {
  if (token == "HIGH") return SignificanceLevel::kHigh;
  if (token == "MEDIUM") return SignificanceLevel::kMedium;
  if (token == "LOW") return SignificanceLevel::kLow;
  throw StructuralError("unknown significance token: '" + token + "'");
}

Evidence parse_evidence(const std::string& token) {
  if (token == "PubMed") return Evidence::kPubMed;
  if (token == "MeSH") return Evidence::kMesh;
  if (token == "CancerIndex") return Evidence::kCancerIndex;
  throw StructuralError("unknown evidence token: '" + token + "'");
}

const char* to_token(GeneType t) {
  switch (t) {
    case GeneType::kOncogene: return "Oncogene";
    case GeneType::kProteinCoding: return "ProteinCoding";
    case GeneType::kPotsf: return "POTSF";
  }
  return "";
}

const char* to_token(SignificanceLevel s) {
  switch (s) {
    case SignificanceLevel::kHigh: return "HIGH";
    case SignificanceLevel::kMedium: return "MEDIUM";
    case SignificanceLevel::kLow: return "LOW";
  }
  return "";
}

const char* to_token(Evidence e) {
  switch (e) {
    case Evidence::kPubMed: return "PubMed";
    case Evidence::kMesh: return "MeSH";
    case Evidence::kCancerIndex: return "CancerIndex";
  }
  return "";
}

std::vector<std::string> record_issues(const GeneRecord& record) {
  std::vector<std::string> issues;
  if (record.symbol.empty()) issues.push_back("empty gene symbol");
  if (record.gene_types.empty()) issues.push_back("gene_type must be nonempty");
  if (record.evidence.empty()) issues.push_back("evidence_type must be nonempty");
  if (record.citations < 1) {
    issues.push_back("citations must be >= 1, got " + std::to_string(record.citations));
  }
  for (const auto& code : record.cross_responsibility) {
    if (!is_cancer_code(code)) issues.push_back("unknown cancer code: " + code);
  }
  for (const auto& [code, level] : record.significance) {
    bool responsible = false;
    for (const auto& c : record.cross_responsibility) {
      if (c == code) responsible = true;
    }
    if (!responsible) {
      issues.push_back("significance for " + code + " without matching crossResponsibility");
    }
  }
  for (const auto& ref : record.external_refs) {
    if (!rdf::is_valid_iri(ref)) issues.push_back("malformed external ref: " + ref);
  }
  return issues;
}

GeneType primary_type(const std::set<GeneType>& types) {
  if (types.count(GeneType::kPotsf)) return GeneType::kPotsf;
  if (types.count(GeneType::kOncogene)) return GeneType::kOncogene;
  return GeneType::kProteinCoding;
}

std::vector<Triple> expand_record(const GeneRecord& record) {
  auto issues = record_issues(record);
  if (!issues.empty()) {
    std::ostringstream msg;
    msg << "invalid gene record '" << record.symbol << "':";
    for (const auto& issue : issues) msg << " " << issue << ";";
    throw StructuralError(msg.str());
  }

  std::vector<Triple> out;
  Term gene = ono(record.symbol);
  Term type = ono(to_token(primary_type(record.gene_types)));
  out.push_back({gene, rdf_type(), type});
  out.push_back({gene, vocab::hasCitations(), Term::integer(record.citations)});
  for (const auto& code : record.cross_responsibility) {
    out.push_back({gene, vocab::crossResponsibility(), ono(code)});
  }
  for (const auto& code : record.cross_responsibility) {
    Term feature = feature_iri(record.symbol, code);
    SignificanceLevel level = SignificanceLevel::kMedium;
    if (auto it = record.significance.find(code); it != record.significance.end()) {
      level = it->second;
    }
    out.push_back({feature, rdf_type(), vocab::Feature()});
    out.push_back({feature, vocab::forGene(), gene});
    out.push_back({feature, vocab::forCancer(), ono(code)});
    out.push_back({feature, vocab::hasSignificance(), ono(to_token(level))});
    out.push_back({feature, vocab::hasBiomarkerType(), type});
  }
  for (Evidence e : record.evidence) {
    out.push_back({gene, vocab::evidenceType(), ono(to_token(e))});
  }
  for (const auto& ref : record.external_refs) {
    out.push_back({gene, rdfs_see_also(), Term::iri(ref)});
  }
  return out;
}

namespace {

struct RosterRow {
  const char* symbol;
  // "CODE[:H|:M|:L]" entries separated by commas; bare code means MEDIUM.
  const char* responsibilities;
  long citations;
  const char* entrez;   // Entrez gene id, or "" when not cross-referenced
  const char* sources;  // evidence letters: P=PubMed M=MeSH C=CancerIndex
};

// Desk-scale roster: the POTSF gene enumeration with TP53's full feature
// set. Responsibility assignments outside TP53 are illustrative.
const RosterRow kRows[] = {
    {"TP53", "BRCA:H,OV:H,PRAD:M,MED:L", 8500, "7157", "PMC"},
    {"ARHGEF12", "LAML", 60, "", "P"},
    {"BCL10", "DLBC", 210, "", "PM"},
    {"BCR", "LAML", 980, "", "PMC"},
    {"BRCA1", "BRCA:H,OV", 6400, "672", "PMC"},
    {"BRCA2", "BRCA:H,OV", 5100, "675", "PMC"},
    {"CAMTA1", "SARC", 85, "", "P"},
    {"CBFA2T3", "LAML", 70, "", "P"},
    {"CBL", "LAML", 340, "", "PM"},
    {"CDC73", "HNSC", 130, "", "P"},
    {"CDH11", "SARC", 110, "", "P"},
    {"CDKN1B", "PRAD", 420, "", "PM"},
    {"CDX2", "COAD", 390, "", "PM"},
    {"CHEK2", "BRCA,PRAD", 860, "11200", "PMC"},
    {"CREB3L1", "SARC", 55, "", "P"},
    {"CREBBP", "DLBC", 610, "", "PM"},
    {"DCC", "COAD", 290, "", "PC"},
    {"DDB2", "SKCM", 140, "", "P"},
    {"DDX3X", "MED,SKCM", 180, "", "PM"},
    {"DICER1", "THCA", 330, "", "PM"},
    {"DNMT1", "COAD", 520, "", "PM"},
    {"DNMT3A", "LAML:H", 940, "", "PMC"},
    {"EPHA1", "COAD", 75, "", "P"},
    {"EPHA3", "LUAD", 120, "", "P"},
    {"EPHB4", "HNSC", 95, "", "P"},
    {"ETV6", "LAML", 450, "", "PM"},
    {"EZH2", "DLBC,SKCM", 1100, "2146", "PMC"},
    {"FAS", "SKCM,STAD,LUAD", 1300, "355", "PMC"},
    {"FAT1", "HNSC", 230, "", "PM"},
    {"FLT3", "LAML:H", 1600, "2322", "PMC"},
    {"FOXA1", "BRCA,PRAD", 540, "", "PM"},
    {"FOXL2", "OV:H", 370, "", "PM"},
    {"FOXO1", "PRAD", 480, "", "PM"},
    {"FOXO3", "BRCA", 350, "", "PM"},
    {"FOXO4", "PRAD", 90, "", "P"},
    {"FOXP1", "DLBC", 260, "", "PM"},
    {"FUS", "SARC", 310, "", "PM"},
    {"GPC3", "LIHC", 280, "", "PM"},
    {"IDH1", "LGG:H,GBM", 1450, "3417", "PMC"},
    {"IKZF2", "LAML", 105, "", "P"},
    {"IRF4", "DLBC", 240, "", "PM"},
    {"KLF4", "COAD", 430, "", "PM"},
    {"KLF5", "STAD", 190, "", "P"},
    {"LIFR", "BRCA", 80, "", "P"},
    {"MAP2K4", "BRCA", 150, "", "P"},
    {"MAP3K4", "UCEC", 65, "", "P"},
    {"MST1R", "STAD", 85, "", "P"},
    {"NCOA4", "THCA", 170, "", "PM"},
    {"NF2", "MESO:H", 520, "4771", "PMC"},
    {"NOTCH1", "HNSC", 1250, "4851", "PMC"},
    {"NOTCH2", "HNSC", 380, "", "PM"},
    {"NOTCH3", "OV", 290, "", "PM"},
    {"NPM1", "LAML:H", 880, "", "PMC"},
    {"NR4A3", "SARC", 75, "", "P"},
    {"NTRK3", "THCA", 260, "", "PM"},
    {"NUP98", "LAML", 320, "", "PM"},
    {"PAX5", "DLBC", 410, "", "PM"},
    {"PHF6", "LAML", 140, "", "P"},
    {"PML", "LAML:H", 720, "5371", "PMC"},
    {"PPARG", "THCA,BLCA", 460, "", "PM"},
    {"PRKAR1A", "ACC", 200, "", "PM"},
    {"PRKCB", "DLBC", 130, "", "P"},
    {"PTPN1", "BRCA", 115, "", "P"},
    {"PTPN11", "LAML", 560, "5781", "PMC"},
    {"RB1", "BLCA,LUSC", 2100, "5925", "PMC"},
    {"RHOA", "STAD", 340, "", "PM"},
    {"RHOB", "LUAD", 95, "", "P"},
    {"RUNX1", "LAML:H", 910, "861", "PMC"},
    {"SH2B3", "LAML", 160, "", "P"},
    {"SLC9A3R1", "BRCA", 60, "", "P"},
    {"SMAD4", "PAAD:H,COAD", 980, "4089", "PMC"},
    {"SOCS1", "DLBC", 270, "", "PM"},
    {"SPOP", "PRAD:H", 530, "", "PM"},
    {"STAT3", "LIHC", 1700, "6774", "PMC"},
    {"SUZ12", "SARC", 210, "", "PM"},
    {"SYK", "LAML", 300, "", "PM"},
    {"TCF3", "DLBC", 330, "", "PM"},
    {"TCF7L2", "COAD", 390, "", "PM"},
    {"TP63", "LUSC,HNSC", 740, "", "PM"},
    {"TRIM24", "LIHC", 120, "", "P"},
    {"WT", "KIRC", 540, "", "PM"},
    {"WHSC1L1", "LUSC", 90, "", "P"},
    {"ZBTB16", "LAML", 230, "", "PM"},
};

GeneRecord row_to_record(const RosterRow& row) {
  GeneRecord rec;
  rec.symbol = row.symbol;
  rec.gene_types = {GeneType::kPotsf};
  rec.citations = row.citations;
  std::istringstream in(row.responsibilities);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::string code = item;
    auto colon = item.find(':');
    if (colon != std::string::npos) {
      code = item.substr(0, colon);
      std::string level = item.substr(colon + 1);
      SignificanceLevel sig = SignificanceLevel::kMedium;
      if (level == "H") sig = SignificanceLevel::kHigh;
      else if (level == "L") sig = SignificanceLevel::kLow;
      rec.significance[code] = sig;
    } else {
      rec.significance[code] = SignificanceLevel::kMedium;
    }
    rec.cross_responsibility.push_back(code);
  }
  for (const char* p = row.sources; *p != '\0'; ++p) {
    switch (*p) {
      case 'P': rec.evidence.insert(Evidence::kPubMed); break;
      case 'M': rec.evidence.insert(Evidence::kMesh); break;
      case 'C': rec.evidence.insert(Evidence::kCancerIndex); break;
      default: break;
    }
  }
  if (row.entrez[0] != '\0') {
    rec.external_refs.push_back(std::string(ns::kNcbiGene) + row.entrez);
  }
  return rec;
}

}  // namespace

const std::vector<GeneRecord>& gene_roster() {
  static const std::vector<GeneRecord> roster = [] {
    std::vector<GeneRecord> out;
    for (const auto& row : kRows) out.push_back(row_to_record(row));
    return out;
  }();
  return roster;
}

}  // namespace onco::ontology
