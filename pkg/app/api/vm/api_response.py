response_fail_status_codes = {
    400: {"description": "Business rule violated; body carries error_code and error_message"},
    422: {"description": "Validation Error"},
    500: {"description": "Internal Server Error"}
}
