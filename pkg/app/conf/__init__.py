# Configuration package: one pydantic-settings class per concern under conf/env, instantiated once in app_settings.
