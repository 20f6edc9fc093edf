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

/* C interface of libshaclform.
 *
 * Every call returns an sf_status. On failure sf_last_error() describes the
 * problem (per thread, valid until the next call on that thread). Strings
 * handed out through char** parameters are owned by the caller and must be
 * released with sf_string_free. All documents are UTF-8 JSON unless noted.
 */

#ifndef SHACLFORM_SHACLFORM_H
#define SHACLFORM_SHACLFORM_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SF_API __declspec(dllexport)
#else
#define SF_API __attribute__((visibility("default")))
#endif

typedef struct sf_service sf_service;

typedef enum sf_status {
    SF_OK = 0,
    SF_ERR_INVALID_ARGUMENT = 1,
    SF_ERR_CONFIG = 2,
    SF_ERR_PARSE = 3,
    SF_ERR_SHAPE = 4,
    SF_ERR_NOT_FOUND = 5,
    SF_ERR_IO = 6,
    SF_ERR_INTERNAL = 7
} sf_status;

/* sf_submit flags */
#define SF_SUBMIT_DRY_RUN 1

SF_API const char* sf_version(void);
SF_API const char* sf_last_error(void);
SF_API const char* sf_status_name(sf_status status);
SF_API void sf_string_free(char* s);

/* Opens a service from a JSON config file, or from a bare shapes file with
 * default settings. */
SF_API sf_status sf_service_open(const char* config_path, sf_service** out);
SF_API sf_status sf_service_open_shapes(const char* shapes_path, sf_service** out);
SF_API void sf_service_close(sf_service* service);

/* {"forms": [{"shapeId", "targetClass", "label"}, ...]} */
SF_API sf_status sf_list_forms(sf_service* service, char** json_out);

/* Canonical form schema. SF_ERR_NOT_FOUND for unknown shapes, SF_ERR_SHAPE
 * for shapes without property shapes. */
SF_API sf_status sf_compile_form(sf_service* service, const char* shape_id, char** json_out);

/* Live validation: phase 1 plus syntactic validators, no network.
 * http_status mirrors the HTTP API (200, 400, 404, 422). */
SF_API sf_status sf_validate_payload(sf_service* service, const char* payload_json, int* http_status,
                                     char** json_out);

/* Phase-1 report for a Turtle data document. conforms receives 0 or 1. */
SF_API sf_status sf_validate_turtle(sf_service* service, const char* turtle, int* conforms, char** report_out);

/* Full submission. Returns the acceptance document (200), the rejection
 * report (422), or the endpoint failure document (502) in json_out. */
SF_API sf_status sf_submit(sf_service* service, const char* payload_json, int flags, int* http_status,
                           char** json_out);

/* HTTP API. bind returns the bound port; run blocks until stop. */
SF_API sf_status sf_service_bind(sf_service* service, int* port_out);
SF_API sf_status sf_service_run(sf_service* service);
SF_API sf_status sf_service_stop(sf_service* service);

#ifdef __cplusplus
}
#endif

#endif /* SHACLFORM_SHACLFORM_H */
