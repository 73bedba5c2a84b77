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

// JSON-over-HTTP access to interviews and artifacts.

#ifndef L4_SERVICE_H_
#define L4_SERVICE_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "l4/interview.h"
#include "l4/lexicon.h"

namespace l4 {

struct ServiceOptions {
  // Directory for per-session event logs. Empty keeps sessions in memory.
  std::string persist_dir;
  MorphLexicon morph = MorphLexicon::Seeded();
  // Program reference -> path of its .l4 source.
  std::map<std::string, std::string> programs;
  std::string ui_dir;  // served under /app when set
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Request handling without the transport, so handlers can be called
// directly. Thread-safe.
class Service {
 public:
  explicit Service(ServiceOptions options);
  ~Service();

  HttpResponse CreateSession(std::string_view body);
  HttpResponse PostAnswer(std::string_view session_id, std::string_view body);
  HttpResponse GetSession(std::string_view session_id);
  HttpResponse GetSessionArtifacts(std::string_view session_id);
  HttpResponse GetProgramArtifacts(std::string_view ref, std::string_view goal,
                                   const std::vector<std::string>& where);
  HttpResponse Health();

  // Rebuilds sessions from the event logs in persist_dir. Returns how many
  // were restored.
  size_t Restore();

  // Event log lines of a session, oldest first.
  std::vector<std::string> EventLog(std::string_view session_id);

  const ServiceOptions& options() const { return options_; }

 private:
  struct Entry;
  std::shared_ptr<Entry> Find(std::string_view id);
  void Append(Entry* entry, const std::string& line);

  ServiceOptions options_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>, std::less<>> sessions_;
};

// Binds the routes of `service` to a listening socket.
class HttpServer {
 public:
  explicit HttpServer(Service* service);
  ~HttpServer();

  // Port 0 picks a free port. Returns the bound port, or -1.
  int Bind(const std::string& host, int port);
  // Blocks until Stop().
  bool Listen();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace l4

#endif  // L4_SERVICE_H_
