// Deterministic generator for the bundled mini-corpus fixtures. Run from the
// repo root:
//
//   gen_fixtures data
//
// Outputs land in data/mini_corpus/ and data/config/stub_script.json. The
// corpus plants 3 exact duplicates and 2 near-duplicates (for the dedup
// checks) and is verified here: planted near-dups must fall in the 0.91-0.97
// exact-Jaccard window, everything else must stay below 0.85.

#include "corpus/document.hpp"
#include "corpus/registry_parse.hpp"
#include "curation/dedup.hpp"
#include "curation/shingle.hpp"
#include "search/index.hpp"
#include "util/jsonl.hpp"
#include "util/text.hpp"

#include <iostream>
#include <map>

using namespace trialkit;

namespace {

struct Topic {
  const char* disease;
  const char* drug;
  const char* system_term;
  const char* drug_class;
  const char* score;
};

const std::vector<Topic> kTopics = {
    {"Melanoma", "Pembrolizumab", "Skin Neoplasms", "Antineoplastic Agents", "tumor response"},
    {"Type 2 Diabetes", "Metformin", "Metabolic Diseases", "Hypoglycemic Agents", "HbA1c"},
    {"Hypertension", "Lisinopril", "Vascular Diseases", "Antihypertensive Agents",
     "systolic blood pressure"},
    {"Asthma", "Budesonide", "Respiratory Tract Diseases", "Bronchodilator Agents", "FEV1"},
    {"Chronic Heart Failure", "Sacubitril", "Heart Diseases", "Cardiovascular Agents",
     "NT-proBNP"},
    {"Breast Cancer", "Trastuzumab", "Breast Neoplasms", "Antineoplastic Agents",
     "progression free survival"},
    {"Rheumatoid Arthritis", "Methotrexate", "Joint Diseases", "Antirheumatic Agents", "DAS28"},
    {"Gastroenteritis", "Vancomycin", "Gastrointestinal Diseases", "Anti-Bacterial Agents",
     "stool frequency"},
    {"Major Depressive Disorder", "Sertraline", "Mood Disorders", "Antidepressive Agents",
     "MADRS"},
    {"Chronic Kidney Disease", "Dapagliflozin", "Urologic Diseases",
     "Sodium-Glucose Transporter 2 Inhibitors", "eGFR"},
    {"Psoriasis", "Ustekinumab", "Skin Diseases", "Dermatologic Agents", "PASI"},
    {"Atrial Fibrillation", "Apixaban", "Arrhythmias, Cardiac", "Anticoagulants",
     "stroke incidence"},
    {"Ulcerative Colitis", "Infliximab", "Colonic Diseases", "Gastrointestinal Agents",
     "Mayo score"},
    {"Migraine", "Erenumab", "Headache Disorders", "CGRP Antagonists", "monthly migraine days"},
};

const std::vector<std::string> kFillers = {
    "Site staff will collect vital signs and laboratory samples at every scheduled visit.",
    "An independent data monitoring committee reviews accumulating safety data twice a year.",
    "Participants record daily symptoms in an electronic diary between clinic visits.",
    "Randomization is stratified by region and by baseline disease severity.",
    "A central laboratory performs all biomarker assays under a common protocol.",
    "Follow-up telephone contacts occur four weeks and twelve weeks after the last dose.",
    "Protocol deviations are tracked and reported to the sponsor within five working days.",
    "Imaging assessments are read centrally by two blinded radiologists.",
    "Treatment adherence is assessed through pill counts and pharmacy dispensing records.",
    "Interim analyses are planned after one third and two thirds of events accrue.",
};

std::string phases_token(size_t i) {
  static const char* tokens[] = {"PHASE1", "PHASE2", "PHASE3", "PHASE4", "EARLY_PHASE1"};
  return tokens[i % 5];
}

std::string status_token(size_t i) {
  static const char* tokens[] = {"RECRUITING", "COMPLETED", "ACTIVE_NOT_RECRUITING",
                                 "NOT_YET_RECRUITING"};
  return tokens[i % 4];
}

std::string date_for(size_t i) {
  // three undated docs; the rest straddle the 2023-01-01 cutoff
  if (i == 4 || i == 9 || i == 14) return "";
  if (i < 28) {
    int month = 1 + static_cast<int>(i % 12);
    int day = 1 + static_cast<int>((i * 7) % 27);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", i % 2 == 0 ? 2021 : 2022, month, day);
    return buf;
  }
  int month = 1 + static_cast<int>(i % 10);
  int day = 1 + static_cast<int>((i * 5) % 27);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", i % 2 == 0 ? 2023 : 2024, month, day);
  return buf;
}

std::string detailed_description(size_t i, const Topic& t) {
  std::string out = "This multicenter study investigates " + std::string(t.drug) +
                    " for the management of " + text::lower_ascii(t.disease) +
                    " across approximately " + std::to_string(4 + i % 9) +
                    " clinical sites. The protocol number is TK-" + std::to_string(1000 + i) +
                    " and enrollment targets " + std::to_string(40 + 10 * (i % 12)) +
                    " participants. ";
  for (size_t k = 0; k < 6; ++k) {
    out += kFillers[(i + k * 3 + i % 4) % kFillers.size()];
    out += ' ';
  }
  out += "The primary analysis evaluates change in " + std::string(t.score) +
         " using a mixed model for repeated measures over " + std::to_string(12 + (i % 5) * 4) +
         " weeks.";
  return out;
}

std::string brief_summary(size_t i, const Topic& t) {
  if (i % 13 == 7) return "Short synopsis pending."; // under the 20-word floor
  return "This randomized study evaluates whether " + std::string(t.drug) +
         " improves outcomes in participants with " + text::lower_ascii(t.disease) +
         " by measuring change in " + t.score + " from baseline over " +
         std::to_string(12 + (i % 5) * 4) +
         " weeks of treatment, together with safety and tolerability.";
}

std::string eligibility_text(size_t i, const Topic& t) {
  std::string out = "Inclusion Criteria:\n";
  out += "- Adults aged 18 to " + std::to_string(65 + i % 15) + " years with confirmed " +
         std::string(t.disease) + "\n";
  out += "- Baseline " + std::string(t.score) + " above the protocol threshold\n";
  out += "- Able to provide written informed consent\n";
  if (i % 3 == 0) out += "- Stable background therapy for at least 4 weeks\n";
  out += "Exclusion Criteria:\n";
  out += "- Pregnant or breastfeeding\n";
  out += "- Known hypersensitivity to " + std::string(t.drug) + "\n";
  if (i % 4 == 1) out += "- Participation in another interventional study within 30 days\n";
  return out;
}

std::vector<std::string> mesh_terms(size_t i, const Topic& t) {
  std::vector<std::string> all = {t.disease,
                                  t.system_term,
                                  "Pathologic Processes",
                                  t.drug_class,
                                  t.drug,
                                  "Therapeutics",
                                  "Disease Attributes",
                                  "Risk Factors"};
  size_t n = 5 + (i % 4); // 5..8 terms; exactly-5 docs are skipped by the builder
  all.resize(n);
  return all;
}

json ctgov_record(size_t i) {
  const Topic& t = kTopics[i % kTopics.size()];
  char nct[16];
  std::snprintf(nct, sizeof(nct), "NCT%08zu", 90000000 + i);
  std::string dd = detailed_description(i, t);
  if (i == 6) dd += " For questions contact jane.doe@site.org or call +1-555-0100.";
  if (i == 11) dd += " Study coordinator reachable at trial.office@example.net.";

  json arms = json::array();
  if (i % 9 != 8) { // a couple of docs without arms exercise empty rendering
    arms.push_back({{"label", t.drug},
                    {"description", std::string("Participants receive ") + t.drug +
                                        " at the protocol dose once daily."}});
    arms.push_back({{"label", "Placebo"},
                    {"description", "Participants receive matching placebo once daily."}});
  }
  json meshes = json::array();
  for (const auto& m : mesh_terms(i, t)) meshes.push_back({{"term", m}});

  json rec{
      {"protocolSection",
       {{"identificationModule",
         {{"nctId", nct},
          {"briefTitle", std::string("A Study of ") + t.drug + " in " + t.disease},
          {"officialTitle", std::string("A Randomized Controlled Study Evaluating ") + t.drug +
                                " in Participants With " + t.disease}}},
        {"statusModule", {{"overallStatus", status_token(i)}}},
        {"descriptionModule",
         {{"briefSummary", brief_summary(i, t)}, {"detailedDescription", dd}}},
        {"conditionsModule", {{"conditions", json::array({t.disease})}}},
        {"designModule",
         {{"studyType", i % 7 == 3 ? "OBSERVATIONAL" : "INTERVENTIONAL"},
          {"phases", json::array({phases_token(i)})}}},
        {"armsInterventionsModule",
         {{"armGroups", arms},
          {"interventions", json::array({json{{"type", "DRUG"}, {"name", t.drug}}})}}},
        {"outcomesModule",
         {{"primaryOutcomes",
           json::array({json{{"measure", std::string("Change in ") + t.score +
                                             " from baseline to week " +
                                             std::to_string(12 + (i % 5) * 4)}}})},
          {"secondaryOutcomes",
           json::array({json{{"measure", "Incidence of treatment emergent adverse events"}},
                        json{{"measure", "Change in quality of life score"}}})}}},
        {"eligibilityModule",
         {{"eligibilityCriteria", eligibility_text(i, t)},
          {"minimumAge", "18 Years"},
          {"maximumAge", std::to_string(65 + i % 15) + " Years"},
          {"sex", "ALL"},
          {"healthyVolunteers", i % 6 == 0}}}}},
      {"derivedSection", {{"conditionBrowseModule", {{"meshes", meshes}}}}},
  };
  std::string date = date_for(i);
  if (!date.empty()) rec["protocolSection"]["statusModule"]["studyFirstSubmitDate"] = date;
  return rec;
}

// flat-record copy of a parsed document, for the cross-source exact dups
json generic_copy_of(const corpus::TrialDocument& doc, const std::string& new_id,
                     const std::string& date) {
  json rec{{"id", new_id},
           {"public_title", doc.public_title},
           {"scientific_title", doc.scientific_title},
           {"brief_summary", doc.brief_summary},
           {"detailed_description", doc.detailed_description},
           {"conditions", doc.conditions},
           {"interventions", doc.interventions},
           {"phase", doc.phase},
           {"status", doc.status},
           {"study_type", doc.study_type},
           {"inclusion_criteria", doc.eligibility.inclusion},
           {"exclusion_criteria", doc.eligibility.exclusion},
           {"min_age", doc.eligibility.min_age},
           {"max_age", doc.eligibility.max_age},
           {"sexes", doc.eligibility.sexes},
           {"primary_outcomes", doc.outcome_measures.primary},
           {"secondary_outcomes", doc.outcome_measures.secondary},
           {"mesh_terms", doc.mesh_terms}};
  json arms = json::array();
  for (const auto& a : doc.arms) {
    arms.push_back({{"label", a.label}, {"description", a.description}});
  }
  rec["arms"] = arms;
  if (!date.empty()) rec["registration_date"] = date;
  if (doc.eligibility.accepts_healthy_volunteers) {
    rec["healthy_volunteers"] = *doc.eligibility.accepts_healthy_volunteers;
  }
  return rec;
}

json generic_record(size_t i, const std::string& prefix) {
  const Topic& t = kTopics[(i + 5) % kTopics.size()];
  json rec{{"id", prefix + std::to_string(20250000 + i)},
           {"public_title", std::string("Evaluation of ") + t.drug + " for " + t.disease},
           {"scientific_title", std::string("An Open Label Evaluation of ") + t.drug +
                                    " in Adults With " + t.disease},
           {"brief_summary", brief_summary(i + 17, t)},
           {"detailed_description", detailed_description(i + 23, t)},
           {"conditions", json::array({t.disease})},
           {"interventions", json::array({t.drug})},
           {"phase", std::string("Phase ") + std::to_string(1 + i % 4)},
           {"status", i % 2 == 0 ? "Recruiting" : "Completed"},
           {"study_type", "Interventional"},
           {"inclusion_criteria",
            json::array({std::string("Adults with documented ") + t.disease,
                         "Willing to attend all study visits"})},
           {"exclusion_criteria", json::array({"Severe hepatic impairment"})},
           {"min_age", "18 Years"},
           {"max_age", "80 Years"},
           {"sexes", "All"},
           {"primary_outcomes",
            json::array({std::string("Change in ") + t.score + " at week 16"})},
           {"secondary_outcomes", json::array({"Adverse event incidence"})},
           {"mesh_terms", mesh_terms(i + 3, t)},
           {"arms", json::array({json{{"label", t.drug},
                                      {"description", std::string("Open label ") + t.drug}}})}};
  std::string date = i % 2 == 0 ? "2022-07-0" + std::to_string(1 + i % 9)
                                : "2023-04-1" + std::to_string(i % 9);
  rec["registration_date"] = date;
  return rec;
}

// ---- auxiliary fixtures ----------------------------------------------------

std::vector<json> make_papers() {
  std::vector<json> papers;
  for (size_t i = 0; i < 20; ++i) {
    const Topic& t = kTopics[i % kTopics.size()];
    json p{{"pmid", std::to_string(10000001 + i)},
           {"title", std::string("Efficacy of ") + t.drug + " in " + t.disease + ": a " +
                         (i % 2 == 0 ? "randomized trial" : "cohort study")},
           {"abstract",
            std::string("Background: ") + t.disease +
                " remains a significant clinical burden. Methods: adults receiving " + t.drug +
                " were followed for a median of " + std::to_string(12 + i % 9) +
                " months and assessed for change in " + t.score +
                ". Results: treatment was associated with measurable improvement in " + t.score +
                " compared with control participants, with an acceptable safety profile. "
                "Conclusions: these findings support further evaluation of " +
                t.drug + " in " + text::lower_ascii(t.disease) + "."},
           {"mesh_terms", json::array({t.disease, t.drug, t.drug_class})},
           {"publication_date", i % 5 == 4 ? "2023-03-15" : "2021-0" + std::to_string(1 + i % 9) +
                                                                "-10"}};
    if (i % 4 == 0) {
      p["full_text"] = "Full text body describing methods, statistical analysis, and complete "
                       "outcome tables for the study of " +
                       std::string(t.drug) + " in " + t.disease + ".";
    }
    papers.push_back(std::move(p));
  }
  return papers;
}

std::vector<json> make_review_pairs() {
  std::vector<json> pairs;
  auto pm = [](size_t i) { return std::to_string(10000001 + i); };
  struct Spec {
    std::vector<size_t> idx;
    const char* split;
    size_t topic;
  };
  // last two pairs resolve fewer than three pmids and are dropped
  std::vector<Spec> specs = {{{0, 1, 2, 3}, "train", 0},    {{2, 3, 4}, "train", 2},
                             {{4, 5, 6, 7, 8}, "train", 4}, {{6, 7, 8}, "train", 6},
                             {{9, 10, 11}, "train", 9},     {{12, 13, 14}, "test", 12},
                             {{15, 16, 17, 18}, "test", 1}, {{17, 18, 19}, "test", 3},
                             {{0, 1}, "train", 5},          {{5}, "test", 7}};
  for (const auto& spec : specs) {
    const Topic& t = kTopics[spec.topic % kTopics.size()];
    json ids = json::array();
    for (size_t i : spec.idx) ids.push_back(pm(i));
    // make missing-pmid pairs reference ids outside the store too
    if (spec.idx.size() < 3) ids.push_back("99999999");
    pairs.push_back(json{
        {"pmids", ids},
        {"review",
         std::string("Across the included studies, ") + t.drug +
             " showed consistent improvement in " + t.score + " for patients with " +
             text::lower_ascii(t.disease) +
             ", with no significant increase in serious adverse events. The overall conclusion "
             "supports a positive effect of treatment on disease control."},
        {"split", spec.split}});
  }
  return pairs;
}

std::vector<json> make_matching_cases() {
  std::vector<json> cases;
  const char* notes[] = {
      "57-year-old presenting with %DISEASE%, on stable %DRUG% therapy for six weeks, "
      "no pregnancy, adequate hepatic function, willing to attend all visits.",
      "34-year-old with newly diagnosed %DISEASE%, treatment naive, history of mild asthma, "
      "no current medications, lives far from the study site.",
      "68-year-old with long-standing %DISEASE% and severe hepatic impairment, currently "
      "enrolled in another interventional study.",
  };
  for (size_t i = 0; i < 40; ++i) {
    const Topic& t = kTopics[i % kTopics.size()];
    char pid[16];
    std::snprintf(pid, sizeof(pid), "PAT-%03zu", i + 1);
    std::string note = notes[i % 3];
    auto replace_all = [&](const std::string& from, const std::string& to) {
      size_t pos = 0;
      while ((pos = note.find(from, pos)) != std::string::npos) {
        note.replace(pos, from.size(), to);
        pos += to.size();
      }
    };
    replace_all("%DISEASE%", text::lower_ascii(t.disease));
    replace_all("%DRUG%", t.drug);
    int gold = static_cast<int>((i * 2 + i / 3) % 3);
    char nct[16];
    std::snprintf(nct, sizeof(nct), "NCT%08zu", 90000000 + (i % 28));
    cases.push_back(json{{"patient_id", pid},
                         {"note", std::string("Patient ") + pid + ": " + note},
                         {"trial_id", nct},
                         {"criteria", eligibility_text(i, t)},
                         {"gold", gold},
                         {"scheme", "TREC2021"},
                         {"split", i < 30 ? "train" : "test"}});
  }
  return cases;
}

std::vector<json> make_sigir_cases() {
  std::vector<json> cases;
  for (size_t i = 0; i < 6; ++i) {
    const Topic& t = kTopics[(i * 2) % kTopics.size()];
    char pid[16];
    std::snprintf(pid, sizeof(pid), "SIG-%03zu", i + 1);
    cases.push_back(json{
        {"patient_id", pid},
        {"note", std::string("Patient ") + pid + ": adult with " + text::lower_ascii(t.disease) +
                     " seeking trial participation, stable on " + t.drug + "."},
        {"trial_id", "SIGIR-TRIAL-" + std::to_string(i + 1)},
        {"criteria", eligibility_text(i + 2, t)},
        {"gold", static_cast<int>(i % 3)},
        {"scheme", "SIGIR"},
        {"split", "test"}});
  }
  return cases;
}

std::vector<json> make_query_seeds() {
  std::vector<json> seeds;
  for (size_t i = 0; i < 20; ++i) {
    const Topic& t = kTopics[i % kTopics.size()];
    std::string disease = text::lower_ascii(t.disease);
    std::string drug = text::lower_ascii(t.drug);
    json query;
    std::string input;
    if (i >= 18) { // deliberately unmatchable: exercises the zero-result filter
      input = "Find trials of unicorn extract for zebrafish dermatitis.";
      query = json{{"diseases", json::array({"zebrafish dermatitis"})},
                   {"interventions", json::array({"unicorn extract"})},
                   {"phases", json::array()},
                   {"statuses", json::array()},
                   {"study_types", json::array()}};
      if (i == 19) input += " Only interventional ones please.";
    } else {
      std::string phase = "phase " + std::to_string(1 + i % 4);
      input = "Find recruiting " + phase + " interventional trials of \"" + drug + "\" for \"" +
              disease + "\".";
      query = json{{"diseases", json::array({disease})},
                   {"interventions", json::array({drug})},
                   {"phases", json::array({phase})},
                   {"statuses", json::array()},
                   {"study_types", json::array()}};
    }
    std::string split = i < 14 ? "train" : (i < 17 ? "dev" : "test");
    seeds.push_back(json{{"task", "query_generation"},
                         {"split", split},
                         {"provenance", json::array({"seed:" + std::to_string(i + 1)})},
                         {"instruction",
                          "Convert the clinical trial search request into a structured query "
                          "with diseases, interventions, phases, statuses, and study types."},
                         {"input", input},
                         {"output", query.dump()}});
  }
  return seeds;
}

json make_stub_script(const std::vector<json>& matching_cases, const std::vector<json>& seeds) {
  json rules = json::array();

  // query-generation candidates: two echo seeds (near-dup filtered), two that
  // hit the mini corpus, one that matches nothing
  json candidates = json::array();
  candidates.push_back(json{{"input", seeds[0].at("input")},
                            {"query", json::parse(seeds[0].at("output").get<std::string>())}});
  candidates.push_back(json{{"input", seeds[1].at("input")},
                            {"query", json::parse(seeds[1].at("output").get<std::string>())}});
  candidates.push_back(
      json{{"input", "Show me ongoing studies testing pembrolizumab in advanced melanoma "
                     "patients."},
           {"query", json{{"diseases", json::array({"melanoma"})},
                          {"interventions", json::array({"pembrolizumab"})},
                          {"phases", json::array()},
                          {"statuses", json::array()},
                          {"study_types", json::array()}}}});
  candidates.push_back(
      json{{"input", "Which studies combine metformin with lifestyle coaching for adults whose "
                     "type 2 diabetes is poorly controlled?"},
           {"query", json{{"diseases", json::array({"type 2 diabetes"})},
                          {"interventions", json::array({"metformin"})},
                          {"phases", json::array()},
                          {"statuses", json::array()},
                          {"study_types", json::array()}}}});
  candidates.push_back(
      json{{"input", "Anything on unobtainium supplements for lunar fatigue syndrome?"},
           {"query", json{{"diseases", json::array({"lunar fatigue syndrome"})},
                          {"interventions", json::array({"unobtainium"})},
                          {"phases", json::array()},
                          {"statuses", json::array()},
                          {"study_types", json::array()}}}});
  rules.push_back(json{{"pattern", "new examples that differ from the existing ones"},
                       {"response", candidates.dump()}});

  // matching answers: correct for PAT-001..020 and most test cases, wrong for
  // PAT-021..030 and two test cases, garbage for one test case
  const char* labels[] = {"Excluded", "Not relevant", "Eligible"};
  for (const auto& c : matching_cases) {
    std::string pid = c.at("patient_id").get<std::string>();
    int gold = c.at("gold").get<int>();
    size_t num = std::stoul(pid.substr(4));
    std::string answer;
    if (num == 38) {
      answer = "The assessment could not be completed for this record.";
    } else {
      bool wrong = (num >= 21 && num <= 30) || num == 36 || num == 39;
      int pick = wrong ? (gold + 1) % 3 : gold;
      answer = "Reviewing each criterion against the note: the age requirement is addressed, "
               "the treatment history is documented, and the exclusion list was checked. "
               "Final decision: " +
               std::string(labels[pick]) + ".";
    }
    rules.push_back(json{{"pattern", pid}, {"response", answer}});
  }

  return json{{"name", "offline-stub"}, {"cooperative", true}, {"rules", rules}};
}

} // namespace

int main(int argc, char** argv) {
  std::filesystem::path root = argc > 1 ? argv[1] : "data";
  std::filesystem::path corpus_dir = root / "mini_corpus";
  std::filesystem::create_directories(corpus_dir);

  // --- registry records ---
  std::vector<json> ctgov;
  for (size_t i = 0; i < 38; ++i) ctgov.push_back(ctgov_record(i));

  // two near-duplicates of docs 0 and 1: identical except ~14 extra tokens
  for (size_t base : {size_t(0), size_t(1)}) {
    json copy = ctgov[base];
    char nct[16];
    std::snprintf(nct, sizeof(nct), "NCT%08zu", 90000100 + base);
    copy["protocolSection"]["identificationModule"]["nctId"] = nct;
    copy["protocolSection"]["statusModule"]["studyFirstSubmitDate"] = "2022-11-15";
    std::string dd =
        copy["protocolSection"]["descriptionModule"]["detailedDescription"].get<std::string>();
    dd += " An optional pharmacokinetic substudy enrolls up to twelve additional participants "
          "at selected sites.";
    copy["protocolSection"]["descriptionModule"]["detailedDescription"] = dd;
    ctgov.push_back(std::move(copy));
  }

  std::vector<corpus::TrialDocument> parsed_ctgov;
  for (const auto& rec : ctgov) {
    parsed_ctgov.push_back(corpus::parse_registry_record(rec, "ClinicalTrials.gov"));
  }

  // exact duplicates of docs 2, 3, 5 under other registries
  std::map<std::string, std::vector<json>> generic_files;
  generic_files["chictr"].push_back(generic_copy_of(parsed_ctgov[2], "ChiCTR2200060001",
                                                    "2022-09-01"));
  generic_files["drks"].push_back(generic_copy_of(parsed_ctgov[3], "DRKS00030002",
                                                  "2022-10-02"));
  generic_files["irct"].push_back(generic_copy_of(parsed_ctgov[5], "IRCT20220003",
                                                  "2022-11-03"));
  for (size_t i = 0; i < 3; ++i) generic_files["chictr"].push_back(generic_record(i, "ChiCTR"));
  for (size_t i = 3; i < 5; ++i) generic_files["drks"].push_back(generic_record(i, "DRKS000"));
  for (size_t i = 5; i < 7; ++i) generic_files["irct"].push_back(generic_record(i, "IRCT2023"));

  write_jsonl(corpus_dir / "ctgov.jsonl", ctgov);
  write_jsonl(corpus_dir / "chictr.jsonl", generic_files["chictr"]);
  write_jsonl(corpus_dir / "drks.jsonl", generic_files["drks"]);
  write_jsonl(corpus_dir / "irct.jsonl", generic_files["irct"]);

  // --- verification: planted similarity structure ---
  std::vector<corpus::TrialDocument> all_docs = parsed_ctgov;
  for (const auto& [name, records] : generic_files) {
    std::string source = name == "chictr" ? "ChiCTR" : (name == "drks" ? "DRKS" : "IRCT");
    for (const auto& rec : records) {
      all_docs.push_back(corpus::parse_registry_record(rec, source));
    }
  }
  std::cout << "total docs: " << all_docs.size() << "\n";

  std::vector<std::set<uint64_t>> shingles;
  for (const auto& d : all_docs) {
    shingles.push_back(curation::shingle_set(curation::dedup_text(d), 5));
  }
  size_t exact_pairs = 0, near_pairs = 0;
  double max_other = 0.0;
  for (size_t a = 0; a < all_docs.size(); ++a) {
    for (size_t b = a + 1; b < all_docs.size(); ++b) {
      double j = curation::exact_jaccard(shingles[a], shingles[b]);
      if (j == 1.0) {
        ++exact_pairs;
      } else if (j >= 0.9) {
        ++near_pairs;
        std::cout << "near pair " << all_docs[a].id << " / " << all_docs[b].id << " J=" << j
                  << "\n";
        if (j > 0.97 || j < 0.91) {
          std::cerr << "near-dup outside the target window\n";
          return 1;
        }
      } else {
        max_other = std::max(max_other, j);
      }
    }
  }
  std::cout << "exact pairs: " << exact_pairs << ", near pairs: " << near_pairs
            << ", max other J: " << max_other << "\n";
  if (exact_pairs != 3 || near_pairs != 2 || max_other >= 0.85) {
    std::cerr << "planted duplicate structure is wrong\n";
    return 1;
  }

  // --- auxiliary fixtures ---
  write_jsonl(corpus_dir / "papers.jsonl", make_papers());
  write_jsonl(corpus_dir / "review_pairs.jsonl", make_review_pairs());
  std::vector<json> matching = make_matching_cases();
  write_jsonl(corpus_dir / "matching_cases.jsonl", matching);
  write_jsonl(corpus_dir / "sigir_cases.jsonl", make_sigir_cases());
  std::vector<json> seeds = make_query_seeds();
  write_jsonl(corpus_dir / "query_gen_seeds.jsonl", seeds);

  std::filesystem::create_directories(root / "config");
  write_file(root / "config" / "stub_script.json",
             make_stub_script(matching, seeds).dump(2) + "\n");

  // sanity: the scripted candidate queries behave as intended on the local
  // index (the two corpus-backed ones hit, the junk one does not)
  search::TermIndex index = search::TermIndex::build(all_docs);
  search::LocalRegistryClient registry(index);
  auto count_for = [&](const json& q) {
    return registry.count_results(search::StructuredQuery::from_json(
        q, search::Vocabulary::defaults(), /*strict=*/false));
  };
  size_t hits_melanoma = count_for(json{{"diseases", {"melanoma"}},
                                        {"interventions", {"pembrolizumab"}}});
  size_t hits_junk = count_for(json{{"diseases", {"lunar fatigue syndrome"}}});
  std::cout << "melanoma+pembrolizumab hits: " << hits_melanoma
            << ", junk hits: " << hits_junk << "\n";
  if (hits_melanoma == 0 || hits_junk != 0) {
    std::cerr << "candidate query hit structure is wrong\n";
    return 1;
  }
  for (size_t i = 0; i < 18; ++i) {
    size_t hits = count_for(json::parse(seeds[i].at("output").get<std::string>()));
    if (hits == 0) {
      std::cerr << "seed " << i << " has zero results but should hit\n";
      return 1;
    }
  }
  std::cout << "fixtures written under " << root << "\n";
  return 0;
}
