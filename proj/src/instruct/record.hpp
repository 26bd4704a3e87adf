#pragma once

#include "gateway/message.hpp"
#include "util/jsonl.hpp"

#include <string>
#include <vector>

namespace trialkit::instruct {

enum class Task {
  query_generation,
  query_expansion,
  single_summarization,
  multi_summarization,
  criteria_design,
  study_arm_design,
  outcome_measure_design,
  patient_trial_matching,
};

constexpr std::array<Task, 8> kAllTasks = {
    Task::query_generation,     Task::query_expansion,    Task::single_summarization,
    Task::multi_summarization,  Task::criteria_design,    Task::study_arm_design,
    Task::outcome_measure_design, Task::patient_trial_matching};

std::string task_name(Task t);
Task task_from(const std::string& name);

/// Design tasks carry multi-turn conversations; everything else is
/// single-turn {instruction, input, output}.
bool is_design_task(Task t);

struct InstructionRecord {
  Task task = Task::query_expansion;
  std::string split; // train | dev | test
  std::vector<std::string> provenance;
  std::vector<std::string> flags;

  // single-turn payload
  std::string instruction;
  std::string input;
  std::string output;

  // multi-turn payload
  std::vector<gateway::ChatMessage> messages;

  bool operator==(const InstructionRecord&) const = default;

  bool multi_turn() const { return is_design_task(task); }

  /// Payload shape must match the task; design conversations must alternate
  /// user/assistant starting with user.
  void validate() const;

  json to_json() const;
  static InstructionRecord from_json(const json& j);
};

void write_records(const std::filesystem::path& path,
                   const std::vector<InstructionRecord>& records);
std::vector<InstructionRecord> read_records(const std::filesystem::path& path);

} // namespace trialkit::instruct
