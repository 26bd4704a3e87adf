#pragma once

#include "gateway/rate_limit.hpp"
#include "util/jsonl.hpp"

#include <filesystem>
#include <string>

namespace trialkit::pipeline {

struct FetchOptions {
  std::string endpoint; // e.g. "https://clinicaltrials.gov/api/v2"
  std::string query;    // condition filter, passed as query.cond
  size_t page_size = 100;
  size_t max_pages = 0; // 0 = until the registry stops returning a page token
  size_t requests_per_second = 2;
};

/// Paged pull from the ClinicalTrials.gov v2 studies API into a raw-record
/// JSONL file. A network failure mid-fetch leaves a resumable checkpoint
/// (<out>.checkpoint) holding the next page token; a later call with the same
/// output path resumes from it. Returns the number of records fetched across
/// all attempts.
size_t fetch_ctgov_records(const FetchOptions& options, const std::filesystem::path& out_path);

} // namespace trialkit::pipeline
