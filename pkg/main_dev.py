import uvicorn

from app.conf.app_settings import server_settings

if __name__ == "__main__":
    print("Running in dev environment")
    uvicorn.run("app.main:app", host=server_settings.HOST, port=server_settings.PORT,
                reload=server_settings.RELOAD, env_file=".env.dev")
