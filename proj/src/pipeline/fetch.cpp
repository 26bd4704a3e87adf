#include "pipeline/fetch.hpp"

#include "util/errors.hpp"

#include <httplib.h>

#include <fstream>
#include <optional>

namespace trialkit::pipeline {

namespace {

struct Checkpoint {
  std::string page_token;
  size_t fetched = 0;
};

std::filesystem::path checkpoint_path(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  p += ".checkpoint";
  return p;
}

std::optional<Checkpoint> load_checkpoint(const std::filesystem::path& out) {
  auto p = checkpoint_path(out);
  if (!std::filesystem::exists(p)) return std::nullopt;
  json j = json::parse(read_file(p), nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return Checkpoint{j.value("page_token", std::string()), j.value("fetched", size_t(0))};
}

void store_checkpoint(const std::filesystem::path& out, const Checkpoint& cp) {
  write_file(checkpoint_path(out), json{{"page_token", cp.page_token},
                                        {"fetched", cp.fetched}}
                                       .dump() +
                                       "\n");
}

} // namespace

size_t fetch_ctgov_records(const FetchOptions& options, const std::filesystem::path& out_path) {
  if (options.endpoint.empty()) throw ConfigError("fetch endpoint is empty");

  Checkpoint cp;
  bool resuming = false;
  if (auto existing = load_checkpoint(out_path)) {
    cp = *existing;
    resuming = true;
  }
  if (out_path.has_parent_path()) std::filesystem::create_directories(out_path.parent_path());
  std::ofstream out(out_path, resuming ? std::ios::app : std::ios::trunc);
  if (!out) throw IoError("cannot open " + out_path.string());

  httplib::Client client(options.endpoint);
  client.set_connection_timeout(30);
  client.set_read_timeout(60);
  gateway::RateLimiter limiter(options.requests_per_second);

  size_t pages = 0;
  for (;;) {
    if (options.max_pages > 0 && pages >= options.max_pages) break;
    httplib::Params params{{"pageSize", std::to_string(options.page_size)},
                           {"format", "json"}};
    if (!options.query.empty()) params.emplace("query.cond", options.query);
    if (!cp.page_token.empty()) params.emplace("pageToken", cp.page_token);

    limiter.acquire();
    auto res = client.Get("/studies", params, httplib::Headers{});
    if (!res || res->status != 200) {
      store_checkpoint(out_path, cp);
      out.flush();
      std::string why = res ? "HTTP " + std::to_string(res->status)
                            : httplib::to_string(res.error());
      throw TransportError("registry fetch failed after " + std::to_string(cp.fetched) +
                           " records (" + why + "); checkpoint written, rerun to resume");
    }
    json page = json::parse(res->body, nullptr, false);
    if (page.is_discarded() || !page.contains("studies")) {
      store_checkpoint(out_path, cp);
      throw TransportError("registry returned a malformed page; checkpoint written");
    }
    for (const auto& study : page.at("studies")) {
      out << study.dump() << '\n';
      ++cp.fetched;
    }
    ++pages;
    if (!page.contains("nextPageToken") || page.at("nextPageToken").is_null()) break;
    cp.page_token = page.at("nextPageToken").get<std::string>();
    if (cp.page_token.empty()) break;
  }
  out.flush();
  std::error_code ec;
  std::filesystem::remove(checkpoint_path(out_path), ec);
  return cp.fetched;
}

} // namespace trialkit::pipeline
