from pydantic_settings import BaseSettings

from app.conf.env.cors_config import CorsSettings
from app.conf.env.field_config import FieldSettings
from app.conf.env.log_config import LoggingSettings
from app.conf.env.search_config import SearchSettings
from app.conf.env.server_config import ServerSettings


class ApplicationSettings(BaseSettings):
    """
    Application settings
    """
    APP_NAME: str = "RadicalIndependence"
    APP_VERSION: str = "0.1.0"
    APP_DESCRIPTION: str = ("Exact arithmetic for linear independence of radicals: canonical radicals, "
                            "field degrees, cyclotomic identities, finite-field independent sets "
                            "and a certified near-miss search.")
    APP_DEBUG: bool = False

    class Config:
        # env_prefix = "APP_"
        env_file = ".env.dev"
        env_file_encoding = "utf-8"
        case_sensitive = True


app_settings = ApplicationSettings()
log_settings = LoggingSettings()
cors_settings = CorsSettings()
server_settings = ServerSettings()
search_settings = SearchSettings()
field_settings = FieldSettings()
