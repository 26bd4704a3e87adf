#include "instruct/record.hpp"

#include "util/errors.hpp"

namespace trialkit::instruct {

std::string task_name(Task t) {
  switch (t) {
  case Task::query_generation: return "query_generation";
  case Task::query_expansion: return "query_expansion";
  case Task::single_summarization: return "single_summarization";
  case Task::multi_summarization: return "multi_summarization";
  case Task::criteria_design: return "criteria_design";
  case Task::study_arm_design: return "study_arm_design";
  case Task::outcome_measure_design: return "outcome_measure_design";
  case Task::patient_trial_matching: return "patient_trial_matching";
  }
  return "query_expansion";
}

Task task_from(const std::string& name) {
  for (Task t : kAllTasks) {
    if (task_name(t) == name) return t;
  }
  throw ValidationError("unknown task: " + name);
}

bool is_design_task(Task t) {
  return t == Task::criteria_design || t == Task::study_arm_design ||
         t == Task::outcome_measure_design;
}

void InstructionRecord::validate() const {
  if (split != "train" && split != "dev" && split != "test") {
    throw ValidationError("record split must be train/dev/test, got '" + split + "'");
  }
  if (multi_turn()) {
    if (messages.size() < 2) {
      throw ValidationError(task_name(task) + " record must carry a conversation");
    }
    if (!instruction.empty() || !input.empty() || !output.empty()) {
      throw ValidationError(task_name(task) + " record must not carry single-turn fields");
    }
    for (size_t i = 0; i < messages.size(); ++i) {
      gateway::Role expected = (i % 2 == 0) ? gateway::Role::user : gateway::Role::assistant;
      if (messages[i].role != expected) {
        throw ValidationError(task_name(task) +
                              " conversation roles must alternate user/assistant");
      }
      if (messages[i].content.empty()) {
        throw ValidationError("conversation message " + std::to_string(i) + " is empty");
      }
    }
    if (messages.size() % 2 != 0) {
      throw ValidationError("conversation must end on an assistant turn");
    }
  } else {
    if (!messages.empty()) {
      throw ValidationError(task_name(task) + " record must be single-turn");
    }
    if (output.empty()) {
      throw ValidationError(task_name(task) + " record has an empty output");
    }
  }
}

json InstructionRecord::to_json() const {
  json j{{"task", task_name(task)}, {"split", split}, {"provenance", provenance}};
  if (multi_turn()) {
    json msgs = json::array();
    for (const auto& m : messages) {
      msgs.push_back({{"role", gateway::role_name(m.role)}, {"content", m.content}});
    }
    j["messages"] = std::move(msgs);
  } else {
    j["instruction"] = instruction;
    j["input"] = input;
    j["output"] = output;
  }
  if (!flags.empty()) j["flags"] = flags;
  return j;
}

InstructionRecord InstructionRecord::from_json(const json& j) {
  InstructionRecord r;
  r.task = task_from(j.at("task").get<std::string>());
  r.split = j.at("split").get<std::string>();
  if (j.contains("provenance")) {
    for (const auto& p : j.at("provenance")) r.provenance.push_back(p.get<std::string>());
  }
  if (j.contains("flags")) {
    for (const auto& f : j.at("flags")) r.flags.push_back(f.get<std::string>());
  }
  if (j.contains("messages")) {
    for (const auto& m : j.at("messages")) {
      r.messages.push_back({gateway::role_from(m.at("role").get<std::string>()),
                            m.at("content").get<std::string>()});
    }
  } else {
    r.instruction = j.value("instruction", std::string());
    r.input = j.value("input", std::string());
    r.output = j.value("output", std::string());
  }
  r.validate();
  return r;
}

void write_records(const std::filesystem::path& path,
                   const std::vector<InstructionRecord>& records) {
  std::vector<json> lines;
  lines.reserve(records.size());
  for (const auto& r : records) {
    r.validate();
    lines.push_back(r.to_json());
  }
  write_jsonl(path, lines);
}

std::vector<InstructionRecord> read_records(const std::filesystem::path& path) {
  std::vector<InstructionRecord> out;
  for (const auto& j : read_jsonl(path)) out.push_back(InstructionRecord::from_json(j));
  return out;
}

} // namespace trialkit::instruct
