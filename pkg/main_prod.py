import uvicorn

from app.conf.app_settings import server_settings

if __name__ == "__main__":
    print("Running in prod")
    uvicorn.run("app.main:app", host=server_settings.HOST, port=server_settings.PORT,
                reload=False, workers=server_settings.WORKERS, env_file=".env.prod")
