#include <httplib.h>

#include <json.hpp>
#include <thread>

#include "codeintl/backend.hpp"
#include "codeintl/errors.hpp"
#include "codeintl/unicode.hpp"

namespace codeintl {

using nlohmann::json;

namespace {

constexpr std::string_view kCarrier = "to ";
constexpr std::string_view kCarrierEchoes[] = {"to ", "para ", "pour ", "per ",
                                               "zu ", "a "};

std::string strip_carrier(const std::string& text) {
  std::string lower = lowercase(text);
  for (auto echo : kCarrierEchoes) {
    if (lower.rfind(echo, 0) == 0 && text.size() > echo.size()) {
      return text.substr(echo.size());
    }
  }
  return text;
}

bool wants_carrier(const PartOfSpeechHint& hint, const std::string& from) {
  return hint.verb_first && hint.tense == Tense::Infinitive &&
         primary_subtag(from) == "en";
}

}  // namespace

ServiceBackend::ServiceBackend(std::string url, bool carrier_phrase)
    : url_(std::move(url)), carrier_phrase_(carrier_phrase) {
  std::string rest = url_;
  if (rest.rfind("http://", 0) == 0) {
    rest = rest.substr(7);
  } else if (rest.find("://") != std::string::npos) {
    throw ConfigError("service backend only supports http:// URLs: " + url_);
  }
  auto slash = rest.find('/');
  if (slash != std::string::npos) {
    prefix_ = rest.substr(slash);
    while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
    rest = rest.substr(0, slash);
  }
  auto colon = rest.rfind(':');
  if (colon != std::string::npos) {
    host_ = rest.substr(0, colon);
    try {
      port_ = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw ConfigError("bad port in service URL " + url_);
    }
  } else {
    host_ = rest;
  }
  if (host_.empty()) throw ConfigError("service URL has no host: " + url_);
}

std::string ServiceBackend::post(const std::string& path,
                                 const std::string& body) {
  httplib::Client client(host_, port_);
  client.set_connection_timeout(5);
  client.set_read_timeout(30);
  ++requests_;
  auto res = client.Post(prefix_ + path, body, "application/json");
  if (!res) {
    throw BackendUnavailable("translation service " + url_ + " unreachable: " +
                             httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw BackendUnavailable("translation service " + url_ + " returned HTTP " +
                             std::to_string(res->status));
  }
  return res->body;
}

std::vector<PhraseTranslation> ServiceBackend::translate_batch(
    std::span<const std::string> phrases, const std::string& from,
    const std::string& to, const PartOfSpeechHint& hint) {
  if (phrases.empty()) return {};
  bool carrier = carrier_phrase_ && wants_carrier(hint, from);
  json request = {{"from", from}, {"to", to}, {"hint", hint.key()}};
  json list = json::array();
  for (const auto& p : phrases) {
    list.push_back(carrier ? std::string(kCarrier) + p : p);
  }
  request["phrases"] = std::move(list);

  json response;
  try {
    response = json::parse(post("/translate", request.dump()));
  } catch (const json::exception& e) {
    throw BackendUnavailable(std::string("malformed service response: ") +
                             e.what());
  }
  const json& texts = response.value("translations", json::array());
  const json& confs = response.value("confidences", json::array());
  if (!texts.is_array() || texts.size() != phrases.size()) {
    throw BackendUnavailable("service returned " +
                             std::to_string(texts.size()) + " translations for " +
                             std::to_string(phrases.size()) + " phrases");
  }
  std::vector<PhraseTranslation> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    std::string text = texts[i].is_string() ? texts[i].get<std::string>() : "";
    if (carrier) text = strip_carrier(text);
    double conf = i < confs.size() && confs[i].is_number()
                      ? confs[i].get<double>()
                      : 1.0;
    out.push_back({std::move(text), conf});
  }
  return out;
}

PhraseTranslation ServiceBackend::translate_phrase(
    const std::string& phrase, const std::string& from, const std::string& to,
    const PartOfSpeechHint& hint) {
  std::string one[] = {phrase};
  return translate_batch(one, from, to, hint).front();
}

LanguageGuess ServiceBackend::detect_language(std::string_view text) {
  json request = {{"text", std::string(text)}};
  try {
    json response = json::parse(post("/detect", request.dump()));
    return {response.value("lang", std::string("und")),
            response.value("confidence", 0.0)};
  } catch (const json::exception& e) {
    throw BackendUnavailable(std::string("malformed service response: ") +
                             e.what());
  }
}

struct StubServer::Impl {
  httplib::Server server;
  std::thread thread;
};

StubServer::StubServer(std::shared_ptr<TranslationBackend> backend)
    : impl_(std::make_unique<Impl>()), backend_(std::move(backend)) {
  auto& server = impl_->server;
  server.Post("/translate", [this](const httplib::Request& req,
                                   httplib::Response& res) {
    ++requests_;
    try {
      json request = json::parse(req.body);
      std::string from = request.at("from");
      std::string to = request.at("to");
      auto hint = PartOfSpeechHint::from_key(request.value("hint", "none"));
      json texts = json::array();
      json confs = json::array();
      for (const auto& p : request.at("phrases")) {
        std::string phrase = p.get<std::string>();
        if (wants_carrier(hint, from) && phrase.rfind(kCarrier, 0) == 0) {
          phrase = phrase.substr(kCarrier.size());
        }
        auto t = backend_->translate_phrase(phrase, from, to, hint);
        texts.push_back(t.text);
        confs.push_back(t.confidence);
      }
      json body = {{"translations", texts}, {"confidences", confs}};
      res.set_content(body.dump(), "application/json");
    } catch (const std::exception& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
    }
  });
  server.Post("/detect", [this](const httplib::Request& req,
                                httplib::Response& res) {
    ++requests_;
    try {
      json request = json::parse(req.body);
      auto guess = backend_->detect_language(request.at("text").get<std::string>());
      json body = {{"lang", guess.lang}, {"confidence", guess.confidence}};
      res.set_content(body.dump(), "application/json");
    } catch (const std::exception& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
    }
  });
}

StubServer::~StubServer() { stop(); }

int StubServer::start(const std::string& host, int port) {
  auto& server = impl_->server;
  int bound = port == 0 ? server.bind_to_any_port(host) : port;
  if (port != 0 && !server.bind_to_port(host, port)) bound = -1;
  if (bound < 0) throw ConfigError("stub server cannot bind " + host);
  impl_->thread = std::thread([&server] { server.listen_after_bind(); });
  server.wait_until_ready();
  return bound;
}

void StubServer::run(const std::string& host, int port) {
  if (!impl_->server.listen(host, port)) {
    throw ConfigError("stub server cannot listen on " + host + ":" +
                      std::to_string(port));
  }
}

void StubServer::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace codeintl
