# _author: Coke
# _date: 2024/9/2 11:02
# _description: 基础数据模型

import json
import logging
from typing import Any, TypeVar

from pydantic import BaseModel, ConfigDict, ValidationError

from src.exceptions import ParseError

Model = TypeVar("Model", bound=BaseModel)


def canonical_dumps(data: Any) -> bytes:
    """
    将 JSON 兼容数据转换为规范字节串

    键按字典序排列, 不包含空白, UTF-8 编码, 相等的数据总是得到相同的字节

    :param data: JSON 兼容的数据
    :return: 规范 JSON 字节串
    """
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


class CustomModel(BaseModel):
    """通用模型"""

    model_config = ConfigDict(
        from_attributes=True,
        populate_by_name=True,
    )

    def serializable_dict(self) -> dict:
        """
        返回一个兼容 JSON 类型的字典, 空值字段不输出

        :return:
        """
        return self.model_dump(mode="json", exclude_none=True)

    def canonical_json(self) -> bytes:
        """
        返回模型的规范 JSON 字节串

        :return:
        """
        return canonical_dumps(self.serializable_dict())


def error_location(exc: ValidationError) -> str:
    """
    取出第一个校验错误的位置, 以点号连接, 根节点为 "$"

    :param exc: pydantic 校验异常
    :return:
    """
    return ".".join(str(part) for part in exc.errors()[0]["loc"]) or "$"


def load_model(model: type[Model], data: bytes | str) -> Model:
    """
    解析 JSON 为模型, 校验失败统一转换为 ParseError

    :param model: 模型类
    :param data: JSON 字节串或文本
    :return: 模型实例
    :raises ParseError: JSON 不合法或字段校验失败时抛出, ERRORS 中记录出错位置
    """
    try:
        return model.model_validate_json(data)
    except ValidationError as exc:
        error = exc.errors()[0]
        location = error_location(exc)
        logging.debug(f"{model.__name__} rejected at {location}: {error['msg']}")
        raise ParseError(f"{model.__name__}: {error['msg']}", location) from exc
