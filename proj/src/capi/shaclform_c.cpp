/*
 * Copyright 2026 The shaclform Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "shaclform/shaclform.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "shaclform/error.hpp"
#include "shaclform/service.hpp"

struct sf_service {
    std::unique_ptr<shaclform::service::Service> impl;
};

namespace {

thread_local std::string last_error;

sf_status fail(sf_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

char* copy_out(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sf_status emit(const std::string& s, char** out) {
    *out = copy_out(s);
    if (!*out) return fail(SF_ERR_INTERNAL, "out of memory");
    return SF_OK;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
sf_status guarded(F&& body) {
    last_error.clear();
    try {
        return body();
    } catch (const shaclform::ConfigError& e) {
        return fail(SF_ERR_CONFIG, e.what());
    } catch (const shaclform::ParseError& e) {
        return fail(SF_ERR_PARSE, e.what());
    } catch (const shaclform::ShapeError& e) {
        return fail(SF_ERR_SHAPE, e.what());
    } catch (const shaclform::StructureError& e) {
        return fail(SF_ERR_SHAPE, e.what());
    } catch (const shaclform::NotFoundError& e) {
        return fail(SF_ERR_NOT_FOUND, e.what());
    } catch (const std::exception& e) {
        return fail(SF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SF_ERR_INTERNAL, "unknown error");
    }
}

sf_status open_with(shaclform::service::ServiceConfig config, sf_service** out) {
    auto handle = std::make_unique<sf_service>();
    handle->impl = std::make_unique<shaclform::service::Service>(std::move(config));
    *out = handle.release();
    return SF_OK;
}

}  // namespace

extern "C" {

const char* sf_version(void) { return "0.1.0"; }

const char* sf_last_error(void) { return last_error.c_str(); }

const char* sf_status_name(sf_status status) {
    switch (status) {
        case SF_OK: return "ok";
        case SF_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SF_ERR_CONFIG: return "config error";
        case SF_ERR_PARSE: return "parse error";
        case SF_ERR_SHAPE: return "shape error";
        case SF_ERR_NOT_FOUND: return "not found";
        case SF_ERR_IO: return "i/o error";
        case SF_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void sf_string_free(char* s) { std::free(s); }

sf_status sf_service_open(const char* config_path, sf_service** out) {
    if (!config_path || !out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { return open_with(shaclform::service::load_config(config_path), out); });
}

sf_status sf_service_open_shapes(const char* shapes_path, sf_service** out) {
    if (!shapes_path || !out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { return open_with(shaclform::service::config_for_shapes(shapes_path), out); });
}

void sf_service_close(sf_service* service) { delete service; }

sf_status sf_list_forms(sf_service* service, char** json_out) {
    if (!service || !json_out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { return emit(service->impl->list_forms().body, json_out); });
}

sf_status sf_compile_form(sf_service* service, const char* shape_id, char** json_out) {
    if (!service || !shape_id || !json_out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    *json_out = nullptr;
    return guarded([&] {
        auto response = service->impl->get_form(shape_id);
        if (response.status == 404) return fail(SF_ERR_NOT_FOUND, "no shape <" + std::string(shape_id) + ">");
        if (response.status != 200) return fail(SF_ERR_SHAPE, response.body);
        return emit(response.body, json_out);
    });
}

sf_status sf_validate_payload(sf_service* service, const char* payload_json, int* http_status, char** json_out) {
    if (!service || !payload_json || !json_out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto response = service->impl->validate(payload_json);
        if (http_status) *http_status = response.status;
        return emit(response.body, json_out);
    });
}

sf_status sf_validate_turtle(sf_service* service, const char* turtle, int* conforms, char** report_out) {
    if (!service || !turtle || !report_out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    *report_out = nullptr;
    return guarded([&] {
        bool ok = false;
        auto response = service->impl->validate_turtle(turtle, &ok);
        if (response.status != 200) return fail(SF_ERR_PARSE, response.body);
        if (conforms) *conforms = ok ? 1 : 0;
        return emit(response.body, report_out);
    });
}

sf_status sf_submit(sf_service* service, const char* payload_json, int flags, int* http_status, char** json_out) {
    if (!service || !payload_json || !json_out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        shaclform::service::ApiResponse response;
        if (flags & SF_SUBMIT_DRY_RUN) {
            std::ostringstream sink;
            response = service->impl->submit(payload_json, sink);
        } else {
            response = service->impl->submit(payload_json);
        }
        if (http_status) *http_status = response.status;
        return emit(response.body, json_out);
    });
}

sf_status sf_service_bind(sf_service* service, int* port_out) {
    if (!service) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        int port = service->impl->bind();
        if (port_out) *port_out = port;
        return SF_OK;
    });
}

sf_status sf_service_run(sf_service* service) {
    if (!service) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        service->impl->run();
        return SF_OK;
    });
}

sf_status sf_service_stop(sf_service* service) {
    if (!service) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        service->impl->stop();
        return SF_OK;
    });
}

}  // extern "C"
