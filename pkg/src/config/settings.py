from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    app_name: str = "nilherm"
    version: str = "0.1.0"
    debug: bool = False
    log_level: str = "INFO"

    # 随机性: 所有抽样都由 seed 决定
    seed: int = 0
    samples: int = 200

    # 复现套件的规模
    random_trials: int = 50
    random_data_instances: int = 20

    class Config:
        env_file = ".env"
        env_prefix = "NILHERM_"
        extra = "ignore"  # 忽略额外的字段


settings = Settings()
