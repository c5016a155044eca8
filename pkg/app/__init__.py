from app.middleware import log_handler

log = log_handler.init_log()
