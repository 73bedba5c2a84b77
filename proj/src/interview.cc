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

#include "l4/interview.h"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>

#include "l4/diagnostic.h"

namespace l4 {

std::string_view QuestionKindName(QuestionKind kind) {
  switch (kind) {
    case QuestionKind::kExistence:
      return "existence";
    case QuestionKind::kPolar:
      return "polar";
    case QuestionKind::kWhOpen:
      return "wh_open";
    case QuestionKind::kWhEnum:
      return "wh_enum";
  }
  return "existence";
}

std::optional<QuestionKind> ParseQuestionKind(std::string_view name) {
  for (QuestionKind k : {QuestionKind::kExistence, QuestionKind::kPolar,
                         QuestionKind::kWhOpen, QuestionKind::kWhEnum}) {
    if (QuestionKindName(k) == name) return k;
  }
  return std::nullopt;
}

InterviewConfig InterviewConfig::FromJson(std::string_view text) {
  InterviewConfig config;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "config: expected an object");
  }
  if (j.contains("instances")) {
    if (!j["instances"].is_object()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "config: \"instances\" must map class names to names");
    }
    for (const auto& [cls, name] : j["instances"].items()) {
      if (!name.is_string()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "config: instance name for " + cls + " must be a string");
      }
      config.instances[cls] = name.get<std::string>();
    }
  }
  return config;
}

// ---- Plans -----------------------------------------------------------------

namespace {

bool IsEnumerated(const NormalizedProgram& program, std::string_view cls) {
  const ClassInfo* info = program.FindClass(cls);
  return info != nullptr && info->is_enumerated;
}

class PlanBuilder {
 public:
  PlanBuilder(const CompiledProgram& compiled) : compiled_(compiled) {}

  std::vector<Question> Build(const NormalizedPredicate& goal) {
    const NormalizedProgram& program = compiled_.program;
    std::vector<NormalizedPredicate> relations;
    std::vector<std::string> member_classes;
    std::string primary;
    if (goal.arity() > 0 && !IsEnumerated(program, goal.arg_classes[0])) {
      primary = goal.arg_classes[0];
    }
    for (const auto& p : AskablePredicates(program, goal.name)) {
      if (p.origin != PredicateOrigin::kMembership) {
        relations.push_back(p);
      } else if (p.owner != primary) {
        member_classes.push_back(p.owner);
      }
    }
    if (relations.empty() && member_classes.empty() && primary.empty()) {
      return {};
    }

    if (!primary.empty()) {
      bool singular = goal.origin == PredicateOrigin::kField &&
                      goal.owner == primary;
      AddExistence(primary, !singular);
    }
    while (!relations.empty()) {
      bool progress = false;
      for (auto it = relations.begin(); it != relations.end();) {
        if (AddRelation(*it)) {
          it = relations.erase(it);
          progress = true;
        } else {
          ++it;
        }
      }
      if (progress) continue;
      for (const auto& cls : relations.front().arg_classes) {
        if (!Known(cls)) {
          AddExistence(cls, true);
          break;
        }
      }
    }
    for (const auto& cls : member_classes) {
      if (!Known(cls)) AddExistence(cls, true);
    }
    return std::move(questions_);
  }

 private:
  bool Known(const std::string& cls) const {
    return IsEnumerated(compiled_.program, cls) ||
           std::find(introduced_.begin(), introduced_.end(), cls) !=
               introduced_.end();
  }

  // A plural existence question is followed by one that names the
  // instances.
  void AddExistence(const std::string& cls, bool plural) {
    Question q;
    q.kind = QuestionKind::kExistence;
    q.predicate = compiled_.symbols.MembershipPredicate(cls);
    q.class_name = cls;
    q.options = std::vector<std::string>{"yes", "no"};
    q.plural = plural;
    questions_.push_back(q);
    if (plural) {
      Question name;
      name.kind = QuestionKind::kWhOpen;
      name.predicate = q.predicate;
      name.class_name = cls;
      questions_.push_back(name);
    }
    introduced_.push_back(cls);
  }

  bool AddRelation(const NormalizedPredicate& p) {
    Question q;
    q.predicate = compiled_.symbols.PredicateName(p.name);
    if (p.arity() == 0) {
      q.kind = QuestionKind::kPolar;
      q.options = std::vector<std::string>{"yes", "no"};
      questions_.push_back(q);
      return true;
    }
    if (p.arity() > 2) {
      throw Error(ErrorCode::kUnsupported,
                  "cannot ask about '" + p.name + "' with " +
                      std::to_string(p.arity()) + " arguments");
    }
    std::optional<size_t> bind;
    for (size_t i = 0; i < p.arity() && !bind; ++i) {
      if (Known(p.arg_classes[i]) &&
          !IsEnumerated(compiled_.program, p.arg_classes[i])) {
        bind = i;
      }
    }
    for (size_t i = 0; i < p.arity() && !bind; ++i) {
      if (Known(p.arg_classes[i])) bind = i;
    }
    if (!bind) return false;
    q.expansion = Expansion{p.arg_classes[*bind], *bind};
    if (p.arity() == 1) {
      q.kind = QuestionKind::kPolar;
      q.class_name = p.arg_classes[0];
      q.options = std::vector<std::string>{"yes", "no"};
      questions_.push_back(q);
      return true;
    }
    q.asked_arg = 1 - *bind;
    q.class_name = p.arg_classes[q.asked_arg];
    if (IsEnumerated(compiled_.program, q.class_name)) {
      q.kind = QuestionKind::kWhEnum;
      q.options = compiled_.symbols.ConstantsOf(q.class_name);
    } else {
      q.kind = QuestionKind::kWhOpen;
      if (!Known(q.class_name)) introduced_.push_back(q.class_name);
    }
    questions_.push_back(q);
    return true;
  }

  const CompiledProgram& compiled_;
  std::vector<Question> questions_;
  std::vector<std::string> introduced_;
};

std::set<std::string> Singletons(const QuestionPlan& plan) {
  std::set<std::string> out;
  for (const auto& q : plan.questions) {
    if (q.kind == QuestionKind::kExistence && !q.plural) {
      out.insert(q.class_name);
    }
  }
  return out;
}

}  // namespace

QuestionPlan BuildPlan(const CompiledProgram& compiled, const QuerySpec& goal,
                       const Lexicon& lexicon, std::string source) {
  const NormalizedPredicate* gp = compiled.symbols.Predicate(goal.predicate);
  if (gp == nullptr) {
    throw Error(ErrorCode::kUnknownGoal,
                "unknown goal '" + goal.predicate + "'");
  }
  QuestionPlan plan{std::move(source), gp->name, goal, {}};
  plan.questions = PlanBuilder(compiled).Build(*gp);

  RealizerContext ctx{&compiled, &lexicon, {}, Singletons(plan)};
  InfoState info;
  for (size_t i = 0; i < plan.questions.size(); ++i) {
    Question& q = plan.questions[i];
    q.id = "q" + std::to_string(i + 1);
    q.prompt = RealizeQuestion(q, ctx, &info);
    if (q.kind == QuestionKind::kWhOpen) {
      q.loop_prompt = RealizeLoopPrompt(q, ctx);
    }
  }
  return plan;
}

// ---- LEXSIS ----------------------------------------------------------------

std::string EmitLexsis(const QuestionPlan& plan) {
  YAML::Emitter out;
  out.SetBoolFormat(YAML::TrueFalseBool);
  out << YAML::BeginMap;
  out << YAML::Key << "lexsis_version" << YAML::Value << 1;
  out << YAML::Key << "meta" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "source" << YAML::Value << plan.source;
  out << YAML::Key << "goal" << YAML::Value << plan.goal_name;
  out << YAML::Key << "generator" << YAML::Value << "l4";
  out << YAML::EndMap;

  out << YAML::Key << "goal" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "predicate" << YAML::Value << plan.goal.predicate;
  out << YAML::Key << "arity" << YAML::Value << plan.goal.arity;
  out << YAML::Key << "query" << YAML::Value << ToString(plan.goal);
  out << YAML::Key << "bound" << YAML::Value;
  if (plan.goal.bound.empty()) out << YAML::Flow;
  out << YAML::BeginSeq;
  for (const auto& [pos, c] : plan.goal.bound) {
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "position"
        << YAML::Value << pos << YAML::Key << "constant" << YAML::Value << c
        << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "free" << YAML::Value << YAML::BeginSeq;
  for (const auto& f : plan.goal.free) {
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "position"
        << YAML::Value << f.position << YAML::Key << "variable" << YAML::Value
        << f.name << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;

  out << YAML::Key << "questions" << YAML::Value;
  if (plan.questions.empty()) out << YAML::Flow;
  out << YAML::BeginSeq;
  for (size_t i = 0; i < plan.questions.size(); ++i) {
    const Question& q = plan.questions[i];
    out << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << q.id;
    out << YAML::Key << "order" << YAML::Value << i + 1;
    out << YAML::Key << "kind" << YAML::Value
        << std::string(QuestionKindName(q.kind));
    out << YAML::Key << "predicate" << YAML::Value << q.predicate;
    out << YAML::Key << "class" << YAML::Value << q.class_name;
    out << YAML::Key << "asked_arg" << YAML::Value << q.asked_arg;
    if (!q.fixed_args.empty()) {
      out << YAML::Key << "fixed_args" << YAML::Value << YAML::BeginSeq;
      for (const auto& [pos, c] : q.fixed_args) {
        out << YAML::Flow << YAML::BeginMap << YAML::Key << "position"
            << YAML::Value << pos << YAML::Key << "constant" << YAML::Value
            << c << YAML::EndMap;
      }
      out << YAML::EndSeq;
    }
    if (q.kind == QuestionKind::kExistence) {
      out << YAML::Key << "plural" << YAML::Value << q.plural;
    }
    if (q.options) {
      out << YAML::Key << "options" << YAML::Value << YAML::Flow
          << YAML::BeginSeq;
      for (const auto& o : *q.options) out << o;
      out << YAML::EndSeq;
    }
    out << YAML::Key << "loop" << YAML::Value << q.loop_prompt.has_value();
    if (q.loop_prompt) {
      out << YAML::Key << "loop_prompt" << YAML::Value << *q.loop_prompt;
    }
    out << YAML::Key << "prompt" << YAML::Value << q.prompt;
    if (!q.links.empty()) {
      out << YAML::Key << "links" << YAML::Value << YAML::BeginSeq;
      for (const auto& l : q.links) out << l;
      out << YAML::EndSeq;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  out << YAML::Key << "expansions" << YAML::Value;
  if (std::none_of(plan.questions.begin(), plan.questions.end(),
                   [](const Question& q) { return q.expansion.has_value(); })) {
    out << YAML::Flow;
  }
  out << YAML::BeginSeq;
  for (const auto& q : plan.questions) {
    if (!q.expansion) continue;
    out << YAML::BeginMap;
    out << YAML::Key << "question" << YAML::Value << q.id;
    out << YAML::Key << "for_each" << YAML::Value << q.expansion->for_each;
    out << YAML::Key << "bind_arg" << YAML::Value << q.expansion->bind_arg;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

namespace {

[[noreturn]] void BadLexsis(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "LEXSIS: " + what);
}

const YAML::Node Required(const YAML::Node& node, const char* key) {
  YAML::Node v = node[key];
  if (!v) BadLexsis(std::string("missing '") + key + "'");
  return v;
}

template <typename T>
T As(const YAML::Node& node, const char* key) {
  try {
    return Required(node, key).as<T>();
  } catch (const YAML::Exception&) {
    BadLexsis(std::string("bad value for '") + key + "'");
  }
}

std::map<size_t, std::string> PositionMap(const YAML::Node& seq) {
  std::map<size_t, std::string> out;
  if (!seq) return out;
  if (!seq.IsSequence()) BadLexsis("expected a list of positions");
  for (const auto& item : seq) {
    out[As<size_t>(item, "position")] = As<std::string>(item, "constant");
  }
  return out;
}

}  // namespace

QuestionPlan LoadLexsis(std::string_view yaml) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml));
  } catch (const YAML::Exception& e) {
    BadLexsis(e.what());
  }
  if (!root.IsMap()) BadLexsis("expected a mapping at the top level");
  if (As<int>(root, "lexsis_version") != 1) {
    BadLexsis("unsupported lexsis_version");
  }
  QuestionPlan plan;
  YAML::Node meta = Required(root, "meta");
  plan.source = As<std::string>(meta, "source");
  plan.goal_name = As<std::string>(meta, "goal");

  YAML::Node goal = Required(root, "goal");
  plan.goal.predicate = As<std::string>(goal, "predicate");
  plan.goal.arity = As<size_t>(goal, "arity");
  plan.goal.bound = PositionMap(goal["bound"]);
  if (YAML::Node free = goal["free"]) {
    for (const auto& f : free) {
      plan.goal.free.push_back(
          {As<size_t>(f, "position"), As<std::string>(f, "variable")});
    }
  }

  YAML::Node questions = Required(root, "questions");
  if (!questions.IsSequence()) BadLexsis("'questions' must be a list");
  std::vector<std::pair<size_t, Question>> ordered;
  for (const auto& node : questions) {
    Question q;
    q.id = As<std::string>(node, "id");
    auto kind = ParseQuestionKind(As<std::string>(node, "kind"));
    if (!kind) BadLexsis("unknown kind for question " + q.id);
    q.kind = *kind;
    q.predicate = As<std::string>(node, "predicate");
    q.class_name = As<std::string>(node, "class");
    q.asked_arg = As<size_t>(node, "asked_arg");
    q.fixed_args = PositionMap(node["fixed_args"]);
    if (node["plural"]) q.plural = As<bool>(node, "plural");
    if (node["options"]) {
      q.options = As<std::vector<std::string>>(node, "options");
    }
    if (node["loop_prompt"]) {
      q.loop_prompt = As<std::string>(node, "loop_prompt");
    }
    q.prompt = As<std::string>(node, "prompt");
    if (node["links"]) q.links = As<std::vector<std::string>>(node, "links");
    size_t order = node["order"] ? As<size_t>(node, "order") : ordered.size();
    ordered.emplace_back(order, std::move(q));
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [order, q] : ordered) plan.questions.push_back(std::move(q));

  if (YAML::Node expansions = root["expansions"]) {
    for (const auto& e : expansions) {
      std::string id = As<std::string>(e, "question");
      auto it = std::find_if(plan.questions.begin(), plan.questions.end(),
                             [&](const Question& q) { return q.id == id; });
      if (it == plan.questions.end()) {
        BadLexsis("expansion for unknown question " + id);
      }
      it->expansion =
          Expansion{As<std::string>(e, "for_each"), As<size_t>(e, "bind_arg")};
    }
  }
  return plan;
}

namespace {

nlohmann::ordered_json InputSchema(const Question& q) {
  nlohmann::ordered_json input;
  switch (q.kind) {
    case QuestionKind::kExistence:
    case QuestionKind::kPolar:
      input["type"] = "yes_no";
      break;
    case QuestionKind::kWhOpen:
      input["type"] = "free_text";
      input["loop_prompt"] = q.loop_prompt.value_or("");
      break;
    case QuestionKind::kWhEnum:
      input["type"] = "enum";
      input["options"] = q.options.value_or(std::vector<std::string>{});
      break;
  }
  return input;
}

}  // namespace

nlohmann::ordered_json QuestionToJson(const Question& q) {
  nlohmann::ordered_json j;
  j["id"] = q.id;
  j["kind"] = QuestionKindName(q.kind);
  j["prompt"] = q.prompt;
  j["predicate"] = q.predicate;
  j["input"] = InputSchema(q);
  return j;
}

std::string InterviewJson(const QuestionPlan& plan) {
  nlohmann::ordered_json j;
  j["goal"] = {{"name", plan.goal_name}, {"query", ToString(plan.goal)}};
  j["questions"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < plan.questions.size(); ++i) {
    const Question& q = plan.questions[i];
    nlohmann::ordered_json item;
    item["id"] = q.id;
    item["order"] = i + 1;
    item["kind"] = QuestionKindName(q.kind);
    item["prompt"] = q.prompt;
    item["predicate"] = q.predicate;
    item["class"] = q.class_name;
    item["asked_arg"] = q.asked_arg;
    item["input"] = InputSchema(q);
    if (q.expansion) {
      item["for_each"] = q.expansion->for_each;
      item["bind_arg"] = q.expansion->bind_arg;
    }
    if (!q.links.empty()) item["links"] = q.links;
    j["questions"].push_back(std::move(item));
  }
  return j.dump(2) + "\n";
}

// ---- Sessions --------------------------------------------------------------

namespace {

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::optional<bool> YesNo(std::string_view value) {
  std::string v = Lower(Trim(value));
  if (v == "yes" || v == "y" || v == "true") return true;
  if (v == "no" || v == "n" || v == "false") return false;
  return std::nullopt;
}

void ReplaceAll(std::string* s, const std::string& from, const std::string& to) {
  for (size_t pos = s->find(from); pos != std::string::npos;
       pos = s->find(from, pos + to.size())) {
    s->replace(pos, from.size(), to);
  }
}

}  // namespace

Interview::Interview(CompiledProgram compiled, Lexicon lexicon,
                     QuestionPlan plan, InterviewConfig config)
    : compiled_(std::move(compiled)),
      lexicon_(std::move(lexicon)),
      plan_(std::move(plan)),
      config_(std::move(config)),
      singletons_(Singletons(plan_)) {}

RealizerContext Interview::Context(const Session& session) const {
  return {&compiled_, &lexicon_, session.facts.names, singletons_};
}

Session Interview::Start(std::string id) const {
  Session s;
  s.id = std::move(id);
  Advance(&s);
  return s;
}

void Interview::Advance(Session* s) const {
  while (s->template_index < plan_.questions.size()) {
    const Question& t = plan_.questions[s->template_index];
    std::vector<std::string> instances{""};
    if (t.expansion) {
      instances = IsEnumerated(compiled_.program, t.expansion->for_each)
                      ? compiled_.symbols.ConstantsOf(t.expansion->for_each)
                      : s->introduced[t.expansion->for_each];
    }
    if (s->instance_index >= instances.size()) {
      ++s->template_index;
      s->instance_index = 0;
      s->round = 1;
      continue;
    }
    Question q = t;
    q.expansion.reset();
    if (t.expansion) {
      const std::string& inst = instances[s->instance_index];
      q.fixed_args[t.expansion->bind_arg] = inst;
      q.id += ":" + inst;
      ReplaceAll(&q.prompt, "{" + t.expansion->for_each + "}",
                 Context(*s).Display(inst));
    }
    if (q.kind == QuestionKind::kWhOpen) {
      q.id += "#" + std::to_string(s->round);
    }
    s->pending = std::move(q);
    return;
  }
  Conclude(s);
}

void Interview::Conclude(Session* s) const {
  s->pending.reset();
  s->concluded = true;
  s->answer_sets = Answer(compiled_.clauses, s->facts, plan_.goal);
  RealizerContext ctx = Context(*s);
  s->conclusion = s->answer_sets.empty()
                      ? RealizeNoAnswer(plan_.goal, s->facts, ctx)
                      : RealizeAnswers(s->answer_sets, ctx);
}

std::string Interview::Introduce(Session* s, const std::string& cls,
                                 const std::string& display) const {
  std::string c = Slugify(display);
  auto& list = s->introduced[cls];
  if (std::find(list.begin(), list.end(), c) == list.end()) {
    list.push_back(c);
    s->facts.Add({compiled_.symbols.MembershipPredicate(cls), {c}});
    s->facts.names[c] = display;
  }
  return c;
}

Session Interview::Ingest(Session s, std::string_view question_id,
                          const AnswerValue& answer) const {
  if (s.concluded || !s.pending) {
    throw Error(ErrorCode::kWrongQuestion, "the interview has concluded");
  }
  if (question_id != s.pending->id) {
    throw Error(ErrorCode::kWrongQuestion,
                "expected an answer to " + s.pending->id + ", got " +
                    std::string(question_id));
  }
  const Question q = *s.pending;
  const std::string value = Trim(answer.value);
  auto fact = [&](const std::string& asked) {
    const NormalizedPredicate* p = compiled_.symbols.Predicate(q.predicate);
    GroundAtom a{q.predicate, std::vector<std::string>(p ? p->arity() : 0)};
    for (const auto& [pos, c] : q.fixed_args) a.args[pos] = c;
    if (!a.args.empty() && q.kind != QuestionKind::kPolar) {
      a.args[q.asked_arg] = asked;
    }
    return a;
  };
  AnswerValue recorded{value, std::nullopt};

  switch (q.kind) {
    case QuestionKind::kExistence:
    case QuestionKind::kPolar: {
      auto yes = YesNo(value);
      if (!yes) {
        throw Error(ErrorCode::kInvalidOption,
                    "answer " + q.id + " with yes or no");
      }
      recorded.value = *yes ? "yes" : "no";
      s.answered.push_back({q.id, q.prompt, recorded});
      if (q.kind == QuestionKind::kExistence) {
        if (!*yes) {
          Conclude(&s);
          return s;
        }
        if (!q.plural) {
          auto it = config_.instances.find(q.class_name);
          if (it != config_.instances.end()) {
            Introduce(&s, q.class_name, it->second);
          } else {
            std::string c = MembershipPredicateName(q.class_name) + "1";
            s.introduced[q.class_name].push_back(c);
            s.facts.Add({q.predicate, {c}});
          }
        }
        ++s.template_index;
        s.instance_index = 0;
      } else {
        if (*yes) s.facts.Add(fact(""));
        ++s.instance_index;
      }
      break;
    }
    case QuestionKind::kWhEnum: {
      std::optional<std::string> chosen;
      for (const auto& o : q.options.value_or(std::vector<std::string>{})) {
        if (Lower(value) == o ||
            Lower(value) == Lower(Context(s).Display(o))) {
          chosen = o;
        }
      }
      if (!chosen) {
        std::string msg = "'" + value + "' is not one of";
        for (const auto& o : q.options.value_or(std::vector<std::string>{})) {
          msg += " " + o;
        }
        throw Error(ErrorCode::kInvalidOption, msg);
      }
      recorded.value = *chosen;
      s.answered.push_back({q.id, q.prompt, recorded});
      s.facts.Add(fact(*chosen));
      ++s.instance_index;
      break;
    }
    case QuestionKind::kWhOpen: {
      std::string c = Slugify(value);
      if (c.empty()) {
        throw Error(ErrorCode::kEmptyAnswer, "enter a name for " + q.id);
      }
      if (auto cls = compiled_.symbols.ClassOfConstant(c)) {
        throw Error(ErrorCode::kDuplicateConstant,
                    "'" + value + "' already names a " + lexicon_.NounFor(*cls));
      }
      for (const auto& [cls, list] : s.introduced) {
        if (cls != q.class_name &&
            std::find(list.begin(), list.end(), c) != list.end()) {
          throw Error(ErrorCode::kDuplicateConstant,
                      "'" + value + "' already names a " + lexicon_.NounFor(cls));
        }
      }
      GroundAtom a = fact(c);
      if (s.facts.Contains(a)) {
        throw Error(ErrorCode::kDuplicateConstant,
                    "'" + value + "' was already entered");
      }
      recorded.more = answer.more.value_or(false);
      s.answered.push_back({q.id, q.prompt, recorded});
      Introduce(&s, q.class_name, value);
      s.facts.Add(std::move(a));
      if (*recorded.more) {
        ++s.round;
      } else {
        ++s.instance_index;
        s.round = 1;
      }
      break;
    }
  }
  s.pending.reset();
  Advance(&s);
  return s;
}

Session Interview::Replay(std::string id,
                          const std::vector<AnswerRecord>& log) const {
  Session s = Start(std::move(id));
  for (const auto& r : log) s = Ingest(std::move(s), r.question_id, r.answer);
  return s;
}

}  // namespace l4
