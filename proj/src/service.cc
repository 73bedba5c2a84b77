// Copyright 2026 The L4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "l4/service.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "httplib.h"
#include "json.hpp"

#include "l4/diagnostic.h"
#include "l4/pipeline.h"
#include "l4/reasoner.h"

namespace l4 {

using Json = nlohmann::ordered_json;

namespace {

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDiagnostics:
    case ErrorCode::kParse:
      return 422;
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kWrongQuestion:
      return 409;
    default:
      return 400;
  }
}

HttpResponse JsonResponse(int status, const Json& body) {
  return {status, body.dump(2) + "\n", "application/json"};
}

HttpResponse ErrorResponse(const Error& err) {
  Json diags = Json::array();
  for (const auto& d : err.diagnostics()) {
    diags.push_back({{"code", DiagCodeName(d.code)},
                     {"line", d.span.line},
                     {"column", d.span.column},
                     {"end_line", d.span.end_line},
                     {"end_column", d.span.end_column},
                     {"message", d.message}});
  }
  return JsonResponse(StatusFor(err.code()),
                      {{"code", ErrorCodeName(err.code())},
                       {"message", err.what()},
                       {"diagnostics", diags}});
}

Json AtomJson(const GroundAtom& a) { return {{"pred", a.predicate}, {"args", a.args}}; }

Json AnswerSetsJson(const std::vector<AnswerSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) {
    Json binding = Json::object();
    for (const auto& [pos, c] : s.binding) binding[std::to_string(pos)] = c;
    Json support = Json::array();
    for (const auto& a : s.support) support.push_back(AtomJson(a));
    out.push_back({{"conclusion", AtomJson(s.conclusion)},
                   {"binding", binding},
                   {"support", support}});
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json ParseBody(std::string_view body) {
  try {
    Json j = Json::parse(body);
    if (!j.is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "expected a JSON object");
    }
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("invalid JSON: ") + e.what());
  }
}

std::string StringField(const Json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("missing field \"") + key + "\"");
    }
    return {};
  }
  if (!j[key].is_string()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("field \"") + key + "\" must be a string");
  }
  return j[key].get<std::string>();
}

std::string NewSessionId() {
  static std::mutex mu;
  static std::random_device rd;
  std::lock_guard<std::mutex> lock(mu);
  std::ostringstream out;
  for (int i = 0; i < 4; ++i) {
    out << std::hex;
    out.width(8);
    out.fill('0');
    out << static_cast<uint32_t>(rd());
  }
  return out.str();
}

}  // namespace

struct Service::Entry {
  std::mutex mu;
  std::shared_ptr<const Interview> interview;
  Session session;
  std::vector<std::string> log;
  std::string path;  // event log file, empty in memory
};

namespace {

// A creation request: {"source": text} or {"program": ref}, "goal",
// optional "where" ({Class: constant}), "config" and "lexsis" (a plan that
// replaces the generated one).
std::shared_ptr<const Interview> BuildInterview(const Json& request, const ServiceOptions& options) {
  std::string source = StringField(request, "source", false);
  std::string name = "input.l4";
  if (source.empty()) {
    std::string ref = StringField(request, "program", false);
    if (ref.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "give either \"source\" or \"program\"");
    }
    auto it = options.programs.find(ref);
    if (it == options.programs.end()) {
      throw Error(ErrorCode::kNotFound, "unknown program '" + ref + "'");
    }
    source = ReadFile(it->second);
    name = Basename(it->second);
  }
  std::string goal = StringField(request, "goal", true);
  LoadedProgram loaded = LoadProgram(source, options.morph);

  std::map<std::string, std::string> where;
  if (request.contains("where")) {
    if (!request["where"].is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "\"where\" must be an object");
    }
    for (const auto& [cls, v] : request["where"].items()) {
      if (!v.is_string()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "\"where\" values must be strings");
      }
      where[cls] = v.get<std::string>();
    }
  }
  QuerySpec query = MakeQuery(loaded.compiled, goal,
                              BindGoal(loaded.compiled, goal, where));
  InterviewConfig config;
  if (request.contains("config")) {
    config = InterviewConfig::FromJson(request["config"].dump());
  }
  QuestionPlan plan =
      request.contains("lexsis")
          ? LoadLexsis(StringField(request, "lexsis", true))
          : BuildPlan(loaded.compiled, query, loaded.lexicon, name);
  return std::make_shared<const Interview>(std::move(loaded.compiled),
                                           std::move(loaded.lexicon),
                                           std::move(plan), std::move(config));
}

Json SessionView(const Interview& interview, const Session& s) {
  Json view;
  view["sessionId"] = s.id;
  view["state"] = s.concluded ? "concluded" : "awaiting";
  view["question"] = s.pending ? QuestionToJson(*s.pending) : Json(nullptr);
  Json transcript = Json::array();
  for (const auto& r : s.answered) {
    Json item = {{"questionId", r.question_id},
                 {"prompt", r.prompt},
                 {"value", r.answer.value}};
    if (r.answer.more) item["more"] = *r.answer.more;
    transcript.push_back(std::move(item));
  }
  view["transcript"] = transcript;
  view["facts"] = Json::parse(FactsToJson(s.facts));
  if (s.concluded) {
    std::vector<Clause> clauses;
    for (const auto& a : s.facts.atoms) {
      clauses.push_back({Atom::FromGround(a), {}});
    }
    const auto& program = interview.compiled().clauses;
    clauses.insert(clauses.end(), program.begin(), program.end());
    view["conclusion"] = {
        {"text", s.conclusion.text},
        {"html", s.conclusion.html},
        {"answerSets", AnswerSetsJson(s.answer_sets)},
        {"scaspExport", ExportScasp(clauses, interview.plan().goal).text}};
  } else {
    view["conclusion"] = nullptr;
  }
  return view;
}

Json ArtifactsJson(const Artifacts& a) {
  return {{"lexsisYaml", a.lexsis_yaml},
          {"scaspText", a.scasp_text},
          {"interviewJson", a.interview_json}};
}

template <typename F>
HttpResponse Guard(F&& f) {
  try {
    return f();
  } catch (const Error& err) {
    return ErrorResponse(err);
  } catch (const std::exception& e) {
    return JsonResponse(500, {{"code", "Internal"},
                              {"message", e.what()},
                              {"diagnostics", Json::array()}});
  }
}

}  // namespace

Service::Service(ServiceOptions options) : options_(std::move(options)) {
  if (!options_.persist_dir.empty()) {
    std::filesystem::create_directories(options_.persist_dir);
  }
}

Service::~Service() = default;

std::shared_ptr<Service::Entry> Service::Find(std::string_view id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::kNotFound,
                "unknown session '" + std::string(id) + "'");
  }
  return it->second;
}

void Service::Append(Entry* entry, const std::string& line) {
  entry->log.push_back(line);
  if (entry->path.empty()) return;
  std::ofstream out(entry->path, std::ios::app | std::ios::binary);
  out << line << '\n';
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot write event log " + entry->path);
  }
}

HttpResponse Service::CreateSession(std::string_view body) {
  return Guard([&] {
    Json request = ParseBody(body);
    auto interview = BuildInterview(request, options_);
    auto entry = std::make_shared<Entry>();
    std::string id = NewSessionId();
    entry->interview = interview;
    entry->session = interview->Start(id);
    if (!options_.persist_dir.empty()) {
      entry->path = (std::filesystem::path(options_.persist_dir) /
                     (id + ".jsonl"))
                        .string();
    }
    Json event = {{"event", "create"}, {"sessionId", id}, {"request", request}};
    Append(entry.get(), event.dump());
    Json view = SessionView(*entry->interview, entry->session);
    view["firstQuestion"] = view["question"];
    {
      std::lock_guard<std::mutex> lock(mu_);
      sessions_[id] = entry;
    }
    return JsonResponse(201, view);
  });
}

HttpResponse Service::PostAnswer(std::string_view session_id,
                                 std::string_view body) {
  return Guard([&] {
    auto entry = Find(session_id);
    Json request = ParseBody(body);
    std::string qid = StringField(request, "questionId", true);
    AnswerValue answer;
    if (!request.contains("value")) {
      throw Error(ErrorCode::kInvalidArgument, "missing field \"value\"");
    }
    const Json& v = request["value"];
    if (v.is_boolean()) {
      answer.value = v.get<bool>() ? "yes" : "no";
    } else if (v.is_string()) {
      answer.value = v.get<std::string>();
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "field \"value\" must be a string or boolean");
    }
    if (request.contains("more")) {
      if (!request["more"].is_boolean()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "field \"more\" must be a boolean");
      }
      answer.more = request["more"].get<bool>();
    }

    std::lock_guard<std::mutex> lock(entry->mu);
    Session next = entry->interview->Ingest(entry->session, qid, answer);
    Json event = {{"event", "answer"}, {"questionId", qid},
                  {"value", answer.value}};
    if (answer.more) event["more"] = *answer.more;
    Append(entry.get(), event.dump());
    entry->session = std::move(next);
    Json view = SessionView(*entry->interview, entry->session);
    view["nextQuestion"] = view["question"];
    return JsonResponse(200, view);
  });
}

HttpResponse Service::GetSession(std::string_view session_id) {
  return Guard([&] {
    auto entry = Find(session_id);
    std::lock_guard<std::mutex> lock(entry->mu);
    return JsonResponse(200, SessionView(*entry->interview, entry->session));
  });
}

HttpResponse Service::GetSessionArtifacts(std::string_view session_id) {
  return Guard([&] {
    auto entry = Find(session_id);
    const Interview& iv = *entry->interview;
    return JsonResponse(200,
                        ArtifactsJson(MakeArtifacts(iv.compiled(), iv.plan())));
  });
}

HttpResponse Service::GetProgramArtifacts(
    std::string_view ref, std::string_view goal,
    const std::vector<std::string>& where) {
  return Guard([&] {
    auto it = options_.programs.find(std::string(ref));
    if (it == options_.programs.end()) {
      throw Error(ErrorCode::kNotFound,
                  "unknown program '" + std::string(ref) + "'");
    }
    if (goal.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "missing query parameter goal");
    }
    LoadedProgram loaded = LoadProgram(ReadFile(it->second), options_.morph);
    QuerySpec query = MakeQuery(loaded.compiled, goal,
                                BindGoal(loaded.compiled, goal, where));
    QuestionPlan plan = BuildPlan(loaded.compiled, query, loaded.lexicon,
                                  Basename(it->second));
    return JsonResponse(200,
                        ArtifactsJson(MakeArtifacts(loaded.compiled, plan)));
  });
}

HttpResponse Service::Health() {
  size_t n = 0;
  {
    std::lock_guard<std::mutex> lock(mu_);
    n = sessions_.size();
  }
  return JsonResponse(200, {{"status", "ok"}, {"sessions", n}});
}

std::vector<std::string> Service::EventLog(std::string_view session_id) {
  auto entry = Find(session_id);
  std::lock_guard<std::mutex> lock(entry->mu);
  return entry->log;
}

size_t Service::Restore() {
  if (options_.persist_dir.empty()) return 0;
  size_t restored = 0;
  for (const auto& file :
       std::filesystem::directory_iterator(options_.persist_dir)) {
    if (file.path().extension() != ".jsonl") continue;
    std::ifstream in(file.path());
    std::string line;
    auto entry = std::make_shared<Entry>();
    entry->path = file.path().string();
    std::vector<AnswerRecord> answers;
    std::string id;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Json event = Json::parse(line);
      entry->log.push_back(line);
      if (event["event"] == "create") {
        id = event["sessionId"].get<std::string>();
        entry->interview = BuildInterview(event["request"], options_);
      } else if (event["event"] == "answer") {
        AnswerRecord r;
        r.question_id = event["questionId"].get<std::string>();
        r.answer.value = event["value"].get<std::string>();
        if (event.contains("more")) r.answer.more = event["more"].get<bool>();
        answers.push_back(std::move(r));
      }
    }
    if (!entry->interview) continue;
    entry->session = entry->interview->Replay(id, answers);
    std::lock_guard<std::mutex> lock(mu_);
    sessions_[id] = entry;
    ++restored;
  }
  return restored;
}

// ---- Transport -------------------------------------------------------------

struct HttpServer::Impl {
  Service* service = nullptr;
  httplib::Server server;
};

namespace {

void Reply(httplib::Response& res, const HttpResponse& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

HttpServer::HttpServer(Service* service) : impl_(std::make_unique<Impl>()) {
  impl_->service = service;
  httplib::Server& svr = impl_->server;
  svr.Post("/v1/sessions", [service](const httplib::Request& req,
                                     httplib::Response& res) {
    Reply(res, service->CreateSession(req.body));
  });
  svr.Post(R"(/v1/sessions/([0-9A-Za-z]+)/answers)",
           [service](const httplib::Request& req, httplib::Response& res) {
             Reply(res, service->PostAnswer(req.matches[1].str(), req.body));
           });
  svr.Get(R"(/v1/sessions/([0-9A-Za-z]+))",
          [service](const httplib::Request& req, httplib::Response& res) {
            Reply(res, service->GetSession(req.matches[1].str()));
          });
  svr.Get(R"(/v1/sessions/([0-9A-Za-z]+)/artifacts)",
          [service](const httplib::Request& req, httplib::Response& res) {
            Reply(res, service->GetSessionArtifacts(req.matches[1].str()));
          });
  svr.Get(R"(/v1/programs/([0-9A-Za-z_.\-]+)/artifacts)",
          [service](const httplib::Request& req, httplib::Response& res) {
            std::vector<std::string> where;
            auto range = req.params.equal_range("where");
            for (auto it = range.first; it != range.second; ++it) {
              where.push_back(it->second);
            }
            Reply(res, service->GetProgramArtifacts(
                           req.matches[1].str(), req.get_param_value("goal"),
                           where));
          });
  svr.Get("/v1/health", [service](const httplib::Request&,
                                  httplib::Response& res) {
    Reply(res, service->Health());
  });
  if (!service->options().ui_dir.empty()) {
    svr.set_mount_point("/app", service->options().ui_dir);
  }
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::Listen() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace l4
