#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "codeintl/backend.hpp"
#include "codeintl/errors.hpp"

// Serves a local backend over the translation service protocol.
int main(int argc, char** argv) {
  CLI::App app{"Translation service stub"};
  std::string backend = "dict:";
  std::string host = "127.0.0.1";
  int port = 8089;
  app.add_option("--backend", backend, "dict:<path> or identity")->default_val("dict:");
  app.add_option("--host", host)->default_val("127.0.0.1");
  app.add_option("--port", port)->default_val(8089);
  CLI11_PARSE(app, argc, argv);

  try {
    codeintl::StubServer server(codeintl::make_backend(backend));
    std::cerr << "serving " << backend << " on http://" << host << ":" << port << "\n";
    server.run(host, port);
  } catch (const codeintl::Error& e) {
    std::cerr << "stub server: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
