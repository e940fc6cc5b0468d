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

#include "onco/ontology/cancer.hpp"

#include "onco/ontology/vocab.hpp"

namespace onco::ontology {

namespace {

std::string doid(const char* id) { return std::string(ns::kDoid) + id; }

std::vector<CancerType> build_roster() {
  std::vector<CancerType> roster = {
      {"ACC", "Adrenocortical Carcinoma", {}, true},
      {"BLCA", "Bladder Urothelial Carcinoma", {}, true},
      {"BRCA", "Breast Cancer", {doid("1612")}, true},
      {"CESC", "Cervical Squamous Cell Carcinoma", {}, true},
      {"CHOL", "Cholangiocarcinoma", {}, true},
      {"COAD", "Colon Adenocarcinoma", {}, true},
      {"DLBC", "Diffuse Large B-cell Lymphoma", {}, true},
      {"ESCA", "Esophageal Carcinoma", {}, true},
      {"GBM", "Glioblastoma Multiforme", {doid("3068")}, true},
      {"HNSC", "Head and Neck Squamous Cell Carcinoma", {}, true},
      {"KICH", "Kidney Chromophobe", {}, true},
      {"KIRC", "Kidney Renal Clear Cell Carcinoma", {}, true},
      {"KIRP", "Kidney Renal Papillary Cell Carcinoma", {}, true},
      {"LAML", "Acute Myeloid Leukemia", {doid("9119")}, true},
      {"LGG", "Brain Lower Grade Glioma", {}, true},
      {"LIHC", "Liver Hepatocellular Carcinoma", {}, true},
      {"LUAD", "Lung Adenocarcinoma", {doid("3910")}, true},
      {"LUSC", "Lung Squamous Cell Carcinoma", {}, true},
      {"MESO", "Mesothelioma", {}, true},
      {"OV", "Ovarian Cancer", {doid("2394")}, true},
      {"PAAD", "Pancreatic Adenocarcinoma", {}, true},
      {"PCPG", "Pheochromocytoma and Paraganglioma", {}, true},
      {"PRAD", "Prostate Cancer", {doid("10283")}, true},
      {"READ", "Rectum Adenocarcinoma", {}, true},
      {"SARC", "Sarcoma", {}, true},
      {"SKCM", "Skin Cutaneous Melanoma", {}, true},
      {"STAD", "Stomach Adenocarcinoma", {}, true},
      {"TGCT", "Testicular Germ Cell Tumors", {}, true},
      {"THCA", "Thyroid Carcinoma", {}, true},
      {"THYM", "Thymoma", {}, true},
      {"UCEC", "Uterine Corpus Endometrial Carcinoma", {}, true},
      {"UCS", "Uterine Carcinosarcoma", {}, true},
      {"UVM", "Uveal Melanoma", {}, true},
      {"MED", "Medulloblastoma", {}, false},
  };
  return roster;
}

}  // namespace

const std::vector<CancerType>& cancer_roster() {
  static const std::vector<CancerType> roster = build_roster();
  return roster;
}

bool is_cancer_code(const std::string& code) {
  for (const auto& c : cancer_roster()) {
    if (c.code == code) return true;
  }
  return false;
}

bool is_tcga_code(const std::string& code) {
  for (const auto& c : cancer_roster()) {
    if (c.code == code) return c.tcga;
  }
  return false;
}

}  // namespace onco::ontology
